#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sumfree/gf2n.hpp"

namespace sumfree {

/// Sparse multivariate polynomial over F_2: a set of exponent vectors, every
/// coefficient implicitly 1. Terms are kept sorted in descending graded
/// lexicographic order, so equal polynomials have identical term lists.
class MPoly {
 public:
  static constexpr int kMaxVars = 8;
  using Monomial = std::array<std::uint16_t, kMaxVars>;

  explicit MPoly(int num_vars);
  static MPoly one(int num_vars);
  static MPoly variable(int num_vars, int index);
  /// Builds from a multiset of monomials; repeated monomials cancel in pairs.
  static MPoly from_terms(int num_vars, std::vector<Monomial> terms);

  int num_vars() const noexcept { return k_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::span<const Monomial> terms() const noexcept { return terms_; }
  const Monomial& leading() const { return terms_.front(); }

  /// Total degree; -1 for the zero polynomial.
  int degree() const noexcept;
  bool is_homogeneous() const noexcept;

  /// Image under X_i -> X_{perm[i]}.
  MPoly permuted(std::span<const int> perm) const;

  friend MPoly operator+(const MPoly& a, const MPoly& b);
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly&, const MPoly&) = default;

 private:
  int k_;
  std::vector<Monomial> terms_;
};

int monomial_degree(const MPoly::Monomial& m) noexcept;
bool grlex_greater(const MPoly::Monomial& a, const MPoly::Monomial& b) noexcept;

/// Integer partition whose parts are all powers of two, nonincreasing.
struct Partition2Adic {
  std::vector<std::uint32_t> parts;

  /// "(8,4,2,1,1)"
  std::string to_string() const;
  friend bool operator==(const Partition2Adic&, const Partition2Adic&) = default;
};

/// 2-adic partitions of 2^(k-1) with at most k parts, decreasing
/// lexicographic order.
std::vector<Partition2Adic> lambda_set(int k);

/// Monomial symmetric polynomial m_lambda in k variables (zero if lambda has
/// more than k parts).
MPoly monomial_symmetric(const Partition2Adic& lambda, int k);

inline constexpr int kThetaSymbolicCap = 7;
inline constexpr int kMooreSymbolicCap = 6;
inline constexpr int kQuotientSymbolicCap = 4;

/// Sum of m_lambda over lambda_set(k); LimitExceeded for k > 7.
MPoly theta_sym(int k);
/// Symbolic Moore determinant (row exponents 2^0..2^(k-1)); k <= 6.
MPoly moore_sym(int k);
/// Same determinant with row exponents 2^0, 2^2, ..., 2^k; k <= 6.
MPoly moore1_sym(int k);
/// Determinant of the k x k matrix with entry (i, j) = X_j^(2^row_log[i]).
MPoly moore_like_sym(int k, std::span<const int> row_log_exponents);

/// Quotient f / g by graded-lex leading-term elimination; throws
/// NotDivisible on a nonzero remainder, InvalidArgument if g = 0.
MPoly exact_div(const MPoly& f, const MPoly& g);

/// moore1_sym(k) / moore_sym(k). k <= 4 unless `allow_k5` (k = 5).
MPoly fk_sym(int k, bool allow_k5 = false);

/// Substitution of `point` (length = num_vars) into f over the given field.
Fe eval_sym(const MPoly& f, std::span<const Fe> point, const Field& field);

bool is_symmetric(const MPoly& f);

/// True iff (a_1 X_1 + ... + a_k X_k) divides f, where bit i of `form` is
/// a_{i+1}. Substitutes the lowest variable in the form by the sum of the
/// others and tests for the zero polynomial.
bool linear_form_divides(const MPoly& f, std::uint32_t form);

/// One monomial per line, exponents space-separated, in stored term order.
std::string dump_terms(const MPoly& f);

}  // namespace sumfree
