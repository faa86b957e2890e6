#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumfree/gf2n.hpp"

namespace sumfree {

/// Dense matrix over F_2 with at most 64 columns; bit j of a row word is
/// column j.
class BitMatrix {
 public:
  static constexpr int kMaxCols = 64;

  BitMatrix() = default;
  BitMatrix(int rows, int cols);
  /// Throws InvalidArgument if any row has bits at or beyond `cols`.
  static BitMatrix from_rows(std::vector<std::uint64_t> rows, int cols);
  static BitMatrix identity(int n);

  int rows() const noexcept { return static_cast<int>(data_.size()); }
  int cols() const noexcept { return cols_; }
  std::uint64_t row(int i) const { return data_[static_cast<std::size_t>(i)]; }
  std::span<const std::uint64_t> data() const noexcept { return data_; }
  bool get(int i, int j) const { return ((row(i) >> j) & 1) != 0; }
  void set(int i, int j, bool v);
  void set_row(int i, std::uint64_t word);

  /// Row-vector times matrix: XOR of the rows selected by `coeffs`.
  std::uint64_t combine(std::uint64_t coeffs) const noexcept;
  /// Product (*this) * rhs; inner dimension must agree.
  BitMatrix operator*(const BitMatrix& rhs) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

struct RrefResult {
  BitMatrix matrix;  // same shape as the input, zero rows last
  int rank = 0;
  std::vector<int> pivots;  // pivot column of each nonzero row, ascending
};

/// Reduced row echelon form with the pivot of each row at its lowest set
/// column, pivot columns ascending down the rows.
RrefResult rref(const BitMatrix& m);

/// Basis (as rows, in RREF) of {x in F_2^cols : m x^T = 0}.
BitMatrix nullspace(const BitMatrix& m);

/// k-dimensional F_2-subspace of a binary field, held as the RREF of the
/// coordinate vectors of any basis (so equal subspaces compare equal).
class Subspace {
 public:
  /// The zero subspace.
  explicit Subspace(Field f);

  const Field& field() const noexcept { return field_; }
  int dim() const noexcept { return basis_.rows(); }
  /// Canonical basis rows, one field element per row.
  const BitMatrix& basis() const noexcept { return basis_; }
  std::vector<Fe> basis_elements() const;
  bool contains(Fe a) const noexcept;

  friend bool operator==(const Subspace& a, const Subspace& b) noexcept {
    return a.field_ == b.field_ && a.basis_ == b.basis_;
  }

 private:
  friend Subspace canonicalize(std::span<const Fe> vectors, const Field& f);
  friend Subspace subspace_from_rref(const Field& f, std::span<const std::uint64_t> rows);
  Subspace(Field f, BitMatrix basis) : field_(std::move(f)), basis_(std::move(basis)) {}

  Field field_;
  BitMatrix basis_;
};

/// The subspace spanned by `vectors`.
Subspace canonicalize(std::span<const Fe> vectors, const Field& f);
/// Wraps rows the caller guarantees to be a full-rank RREF (no re-reduction).
Subspace subspace_from_rref(const Field& f, std::span<const std::uint64_t> rows);

/// Number of k-dimensional subspaces of F_2^n; throws Overflow past 128 bits.
u128 gaussian_binomial(int n, int k);
/// |GL(k, F_2)|; throws Overflow past 128 bits.
u128 gl2_order(int k);

/// All 2^dim elements, in Gray-code order starting from 0.
std::vector<Fe> elements(const Subspace& s);

/// Visits every element of the span of `basis` in Gray-code order (each
/// element differs from the previous by one basis vector).
template <class Fn>
void for_each_element(std::span<const std::uint64_t> basis, Fn&& fn) {
  std::uint64_t x = 0;
  fn(Fe{x});
  const std::uint64_t count = std::uint64_t{1} << basis.size();
  for (std::uint64_t i = 1; i < count; ++i) {
    x ^= basis[static_cast<std::size_t>(std::countr_zero(i))];
    fn(Fe{x});
  }
}

/// Deterministic stream over all k-dimensional subspaces of F_{2^n}.
///
/// Order: pivot-column sets in lexicographic order; within a pivot set the
/// free RREF entries (row-major, columns ascending) count as a binary
/// counter whose lowest bit is the first free entry. Any index sub-range
/// [begin, end) of the stream can be opened directly, so sweeps shard by
/// index without shared state.
class SubspaceEnumerator {
 public:
  static constexpr int kMaxDegree = 40;

  /// Throws LimitExceeded if the total count overflows 128 bits or n > 40.
  SubspaceEnumerator(Field f, int k);
  SubspaceEnumerator(Field f, int k, u128 begin, u128 end);

  u128 total() const noexcept { return total_; }
  u128 index() const noexcept { return index_; }

  /// Advances to the next subspace; false once the range is exhausted.
  bool next();
  /// RREF rows of the current subspace (valid after next() returned true).
  std::span<const std::uint64_t> rows() const noexcept { return rows_; }
  Subspace current() const { return subspace_from_rref(field_, rows_); }

 private:
  void load_pivots();
  bool advance_pivots();
  void seek(u128 index);

  Field field_;
  int n_;
  int k_;
  u128 total_ = 0;
  u128 index_ = 0;
  u128 end_ = 0;
  bool started_ = false;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, col) of each free entry
  std::vector<std::uint64_t> rows_;
};

}  // namespace sumfree
