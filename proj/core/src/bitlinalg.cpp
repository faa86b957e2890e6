#include "sumfree/bitlinalg.hpp"

#include <limits>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

std::uint64_t col_mask(int cols) {
  return cols >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cols) - 1;
}

}  // namespace

BitMatrix::BitMatrix(int rows, int cols) : cols_(cols), data_(static_cast<std::size_t>(rows), 0) {
  if (rows < 0 || cols < 0 || cols > kMaxCols)
    throw Error(ErrorCode::InvalidArgument, "bit matrix supports at most 64 columns");
}

BitMatrix BitMatrix::from_rows(std::vector<std::uint64_t> rows, int cols) {
  BitMatrix m(0, cols);
  for (std::uint64_t w : rows)
    if ((w & ~col_mask(cols)) != 0)
      throw Error(ErrorCode::InvalidArgument, "row " + to_hex(w) + " exceeds " + std::to_string(cols) + " columns");
  m.data_ = std::move(rows);
  return m;
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[static_cast<std::size_t>(i)] = std::uint64_t{1} << i;
  return m;
}

void BitMatrix::set(int i, int j, bool v) {
  auto& w = data_[static_cast<std::size_t>(i)];
  const std::uint64_t bit = std::uint64_t{1} << j;
  w = v ? (w | bit) : (w & ~bit);
}

void BitMatrix::set_row(int i, std::uint64_t word) {
  if ((word & ~col_mask(cols_)) != 0) throw Error(ErrorCode::InvalidArgument, "row exceeds column count");
  data_[static_cast<std::size_t>(i)] = word;
}

std::uint64_t BitMatrix::combine(std::uint64_t coeffs) const noexcept {
  std::uint64_t acc = 0;
  for (; coeffs != 0; coeffs &= coeffs - 1) acc ^= data_[static_cast<std::size_t>(std::countr_zero(coeffs))];
  return acc;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const {
  if (cols_ != rhs.rows()) throw Error(ErrorCode::InvalidArgument, "bit matrix shape mismatch");
  BitMatrix out(rows(), rhs.cols());
  for (int i = 0; i < rows(); ++i) out.data_[static_cast<std::size_t>(i)] = rhs.combine(row(i));
  return out;
}

RrefResult rref(const BitMatrix& m) {
  RrefResult r{m, 0, {}};
  std::vector<std::uint64_t> rows(m.data().begin(), m.data().end());
  const int nrows = m.rows();
  for (int col = 0; col < m.cols() && r.rank < nrows; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int found = -1;
    for (int i = r.rank; i < nrows; ++i)
      if (rows[static_cast<std::size_t>(i)] & bit) {
        found = i;
        break;
      }
    if (found < 0) continue;
    std::swap(rows[static_cast<std::size_t>(found)], rows[static_cast<std::size_t>(r.rank)]);
    const std::uint64_t piv = rows[static_cast<std::size_t>(r.rank)];
    for (int i = 0; i < nrows; ++i)
      if (i != r.rank && (rows[static_cast<std::size_t>(i)] & bit)) rows[static_cast<std::size_t>(i)] ^= piv;
    r.pivots.push_back(col);
    ++r.rank;
  }
  r.matrix = BitMatrix::from_rows(std::move(rows), m.cols());
  return r;
}

BitMatrix nullspace(const BitMatrix& m) {
  const RrefResult r = rref(m);
  const int cols = m.cols();
  std::uint64_t pivot_cols = 0;
  for (int p : r.pivots) pivot_cols |= std::uint64_t{1} << p;
  std::vector<std::uint64_t> basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_cols & (std::uint64_t{1} << f)) continue;
    std::uint64_t x = std::uint64_t{1} << f;
    for (int i = 0; i < r.rank; ++i)
      if (r.matrix.get(i, f)) x |= std::uint64_t{1} << r.pivots[static_cast<std::size_t>(i)];
    basis.push_back(x);
  }
  RrefResult nb = rref(BitMatrix::from_rows(std::move(basis), cols));
  std::vector<std::uint64_t> rows(nb.matrix.data().begin(), nb.matrix.data().begin() + nb.rank);
  return BitMatrix::from_rows(std::move(rows), cols);
}

Subspace::Subspace(Field f) : field_(std::move(f)), basis_(0, field_.n()) {}

std::vector<Fe> Subspace::basis_elements() const {
  std::vector<Fe> out;
  out.reserve(static_cast<std::size_t>(dim()));
  for (std::uint64_t w : basis_.data()) out.push_back(Fe{w});
  return out;
}

bool Subspace::contains(Fe a) const noexcept {
  if (!field_.contains(a)) return false;
  std::uint64_t x = a.bits;
  for (std::uint64_t w : basis_.data())
    if (x & (w & -w)) x ^= w;
  return x == 0;
}

Subspace canonicalize(std::span<const Fe> vectors, const Field& f) {
  std::vector<std::uint64_t> rows;
  rows.reserve(vectors.size());
  for (Fe v : vectors) {
    if (!f.contains(v)) throw Error(ErrorCode::InvalidArgument, "vector " + to_hex(v) + " is not a field element");
    rows.push_back(v.bits);
  }
  const RrefResult r = rref(BitMatrix::from_rows(std::move(rows), f.n()));
  std::vector<std::uint64_t> basis(r.matrix.data().begin(), r.matrix.data().begin() + r.rank);
  return Subspace(f, BitMatrix::from_rows(std::move(basis), f.n()));
}

Subspace subspace_from_rref(const Field& f, std::span<const std::uint64_t> rows) {
  return Subspace(f, BitMatrix::from_rows(std::vector<std::uint64_t>(rows.begin(), rows.end()), f.n()));
}

u128 gaussian_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "gaussian_binomial needs 0 <= k <= n");
  // Row-by-row recurrence G(m, j) = G(m-1, j-1) + 2^j G(m-1, j) with a
  // saturation flag; intermediate overflow only matters if it reaches (n, k).
  struct Cell {
    u128 v = 0;
    bool over = false;
  };
  std::vector<Cell> row(static_cast<std::size_t>(k) + 1);
  row[0].v = 1;
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      Cell& c = row[static_cast<std::size_t>(j)];
      const Cell& left = row[static_cast<std::size_t>(j - 1)];
      Cell next;
      next.over = c.over || left.over;
      if (!next.over) {
        if (c.v != 0 && (j >= 128 || c.v > (std::numeric_limits<u128>::max() >> j))) {
          next.over = true;
        } else {
          const u128 scaled = c.v == 0 ? 0 : c.v << j;
          next.over = __builtin_add_overflow(scaled, left.v, &next.v);
        }
      }
      c = next;
    }
  }
  const Cell& out = row[static_cast<std::size_t>(k)];
  if (out.over)
    throw Error(ErrorCode::Overflow,
                "gaussian binomial [" + std::to_string(n) + " choose " + std::to_string(k) + "]_2 exceeds 128 bits");
  return out.v;
}

u128 gl2_order(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative dimension");
  if (k >= 12) throw Error(ErrorCode::Overflow, "|GL(" + std::to_string(k) + ",2)| exceeds 128 bits");
  const u128 top = u128{1} << k;
  u128 r = 1;
  for (int i = 0; i < k; ++i)
    if (__builtin_mul_overflow(r, top - (u128{1} << i), &r))
      throw Error(ErrorCode::Overflow, "|GL(" + std::to_string(k) + ",2)| exceeds 128 bits");
  return r;
}

std::vector<Fe> elements(const Subspace& s) {
  if (s.dim() > 30) throw Error(ErrorCode::LimitExceeded, "element listing is capped at dimension 30");
  std::vector<Fe> out;
  out.reserve(std::size_t{1} << s.dim());
  for_each_element(s.basis().data(), [&](Fe x) { out.push_back(x); });
  return out;
}

SubspaceEnumerator::SubspaceEnumerator(Field f, int k)
    : SubspaceEnumerator(std::move(f), k, 0, std::numeric_limits<u128>::max()) {}

SubspaceEnumerator::SubspaceEnumerator(Field f, int k, u128 begin, u128 end)
    : field_(std::move(f)), n_(field_.n()), k_(k) {
  if (k < 0 || k > n_) throw Error(ErrorCode::InvalidArgument, "subspace dimension out of range");
  if (n_ > kMaxDegree) throw Error(ErrorCode::LimitExceeded, "subspace enumeration is capped at n = 40");
  try {
    total_ = gaussian_binomial(n_, k_);
  } catch (const Error&) {
    throw Error(ErrorCode::LimitExceeded, "subspace count overflows 128 bits");
  }
  end_ = std::min(end, total_);
  index_ = begin;
  if (index_ < end_) seek(index_);
}

void SubspaceEnumerator::load_pivots() {
  free_.clear();
  rows_.assign(static_cast<std::size_t>(k_), 0);
  std::uint64_t pivot_cols = 0;
  for (int p : pivots_) pivot_cols |= std::uint64_t{1} << p;
  for (int i = 0; i < k_; ++i) {
    const int p = pivots_[static_cast<std::size_t>(i)];
    rows_[static_cast<std::size_t>(i)] = std::uint64_t{1} << p;
    for (int c = p + 1; c < n_; ++c)
      if (!(pivot_cols & (std::uint64_t{1} << c))) free_.emplace_back(i, c);
  }
}

bool SubspaceEnumerator::advance_pivots() {
  int i = k_ - 1;
  while (i >= 0 && pivots_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
  if (i < 0) return false;
  ++pivots_[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k_; ++j) pivots_[static_cast<std::size_t>(j)] = pivots_[static_cast<std::size_t>(j - 1)] + 1;
  load_pivots();
  return true;
}

void SubspaceEnumerator::seek(u128 target) {
  pivots_.resize(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) pivots_[static_cast<std::size_t>(i)] = i;
  load_pivots();
  u128 acc = 0;
  for (;;) {
    const u128 block = u128{1} << free_.size();
    if (target < acc + block) break;
    acc += block;
    advance_pivots();
  }
  const u128 offset = target - acc;
  for (std::size_t t = 0; t < free_.size(); ++t)
    if ((offset >> t) & 1) rows_[static_cast<std::size_t>(free_[t].first)] |= std::uint64_t{1} << free_[t].second;
}

bool SubspaceEnumerator::next() {
  if (!started_) {
    started_ = true;
    return index_ < end_;
  }
  if (index_ >= end_) return false;
  ++index_;
  if (index_ >= end_) return false;
  for (const auto& [r, c] : free_) {
    auto& w = rows_[static_cast<std::size_t>(r)];
    const std::uint64_t bit = std::uint64_t{1} << c;
    w ^= bit;
    if (w & bit) return true;
  }
  return advance_pivots();
}

}  // namespace sumfree
