#include "sumfree/sympoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sumfree/error.hpp"

namespace sumfree {

using Monomial = MPoly::Monomial;

int monomial_degree(const Monomial& m) noexcept {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool grlex_greater(const Monomial& a, const Monomial& b) noexcept {
  const int da = monomial_degree(a);
  const int db = monomial_degree(b);
  if (da != db) return da > db;
  return a > b;
}

namespace {

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept { return grlex_greater(a, b); }
};

void check_vars(int k) {
  if (k < 0 || k > MPoly::kMaxVars)
    throw Error(ErrorCode::InvalidArgument, "polynomials support at most 8 variables");
}

}  // namespace

MPoly::MPoly(int num_vars) : k_(num_vars) { check_vars(num_vars); }

MPoly MPoly::one(int num_vars) {
  MPoly p(num_vars);
  p.terms_.push_back(Monomial{});
  return p;
}

MPoly MPoly::variable(int num_vars, int index) {
  MPoly p(num_vars);
  Monomial m{};
  m[static_cast<std::size_t>(index)] = 1;
  p.terms_.push_back(m);
  return p;
}

MPoly MPoly::from_terms(int num_vars, std::vector<Monomial> terms) {
  MPoly p(num_vars);
  std::sort(terms.begin(), terms.end(), GrlexGreater{});
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) p.terms_.push_back(terms[i]);
    i = j;
  }
  return p;
}

int MPoly::degree() const noexcept { return terms_.empty() ? -1 : monomial_degree(terms_.front()); }

bool MPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Monomial& m) { return monomial_degree(m) == d; });
}

MPoly MPoly::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != k_) throw Error(ErrorCode::ArityMismatch, "permutation length mismatch");
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const Monomial& m : terms_) {
    Monomial t{};
    for (int i = 0; i < k_; ++i) t[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = m[static_cast<std::size_t>(i)];
    out.push_back(t);
  }
  return from_terms(k_, std::move(out));
}

MPoly operator+(const MPoly& a, const MPoly& b) {
  if (a.k_ != b.k_) throw Error(ErrorCode::ArityMismatch, "adding polynomials in different rings");
  std::vector<Monomial> all(a.terms_);
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return MPoly::from_terms(a.k_, std::move(all));
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.k_ != b.k_) throw Error(ErrorCode::ArityMismatch, "multiplying polynomials in different rings");
  std::vector<Monomial> all;
  all.reserve(a.terms_.size() * b.terms_.size());
  for (const Monomial& x : a.terms_)
    for (const Monomial& y : b.terms_) {
      Monomial t;
      for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<std::uint16_t>(x[i] + y[i]);
      all.push_back(t);
    }
  return MPoly::from_terms(a.k_, std::move(all));
}

std::string Partition2Adic::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void partitions_rec(std::uint32_t remaining, std::uint32_t max_part, std::size_t max_parts,
                    std::vector<std::uint32_t>& cur, std::vector<Partition2Adic>& out) {
  if (remaining == 0) {
    out.push_back(Partition2Adic{cur});
    return;
  }
  if (cur.size() == max_parts) return;
  for (std::uint32_t p = max_part; p >= 1; p >>= 1) {
    if (p > remaining) continue;
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition2Adic> lambda_set(int k) {
  if (k < 1 || k > 31) throw Error(ErrorCode::InvalidArgument, "lambda_set needs 1 <= k <= 31");
  const std::uint32_t total = std::uint32_t{1} << (k - 1);
  std::vector<Partition2Adic> out;
  std::vector<std::uint32_t> cur;
  partitions_rec(total, total, static_cast<std::size_t>(k), cur, out);
  return out;
}

MPoly monomial_symmetric(const Partition2Adic& lambda, int k) {
  check_vars(k);
  if (lambda.parts.size() > static_cast<std::size_t>(k)) return MPoly(k);
  std::vector<std::uint16_t> exps(static_cast<std::size_t>(k), 0);
  std::copy(lambda.parts.begin(), lambda.parts.end(), exps.begin());
  std::sort(exps.begin(), exps.end());
  std::vector<Monomial> terms;
  do {
    Monomial m{};
    std::copy(exps.begin(), exps.end(), m.begin());
    terms.push_back(m);
  } while (std::next_permutation(exps.begin(), exps.end()));
  return MPoly::from_terms(k, std::move(terms));
}

MPoly theta_sym(int k) {
  if (k < 1 || k > kThetaSymbolicCap)
    throw Error(ErrorCode::LimitExceeded, "symbolic theta is capped at k = 7 (asked " + std::to_string(k) + ")");
  std::vector<Monomial> all;
  std::size_t expected = 0;
  for (const Partition2Adic& lambda : lambda_set(k)) {
    const MPoly m = monomial_symmetric(lambda, k);
    expected += m.size();
    all.insert(all.end(), m.terms().begin(), m.terms().end());
  }
  MPoly theta = MPoly::from_terms(k, std::move(all));
  // Distinct partitions never share a monomial, so nothing may cancel.
  if (theta.size() != expected) throw std::logic_error("theta_sym: monomial symmetric polynomials overlap");
  return theta;
}

MPoly moore_like_sym(int k, std::span<const int> row_log_exponents) {
  check_vars(k);
  if (static_cast<int>(row_log_exponents.size()) != k) throw Error(ErrorCode::ArityMismatch, "need k row exponents");
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<Monomial> terms;
  // Leibniz expansion; signs vanish in characteristic 2.
  do {
    Monomial m{};
    for (int i = 0; i < k; ++i)
      m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] +=
          static_cast<std::uint16_t>(1u << row_log_exponents[static_cast<std::size_t>(i)]);
    terms.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return MPoly::from_terms(k, std::move(terms));
}

MPoly moore_sym(int k) {
  if (k < 1 || k > kMooreSymbolicCap)
    throw Error(ErrorCode::LimitExceeded, "symbolic Moore determinant is capped at k = 6");
  std::vector<int> rows;
  for (int i = 0; i < k; ++i) rows.push_back(i);
  return moore_like_sym(k, rows);
}

MPoly moore1_sym(int k) {
  if (k < 1 || k > kMooreSymbolicCap)
    throw Error(ErrorCode::LimitExceeded, "symbolic Moore determinant is capped at k = 6");
  std::vector<int> rows{0};
  for (int i = 2; i <= k; ++i) rows.push_back(i);
  return moore_like_sym(k, rows);
}

MPoly exact_div(const MPoly& f, const MPoly& g) {
  if (f.num_vars() != g.num_vars()) throw Error(ErrorCode::ArityMismatch, "dividing polynomials in different rings");
  if (g.is_zero()) throw Error(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const int k = f.num_vars();
  std::set<Monomial, GrlexGreater> rem(f.terms().begin(), f.terms().end());
  std::vector<Monomial> quotient;
  const Monomial& lead = g.leading();
  while (!rem.empty()) {
    const Monomial lt = *rem.begin();
    Monomial t{};
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (lt[i] < lead[i]) throw Error(ErrorCode::NotDivisible, "leading term not divisible by divisor's leading term");
      t[i] = static_cast<std::uint16_t>(lt[i] - lead[i]);
    }
    quotient.push_back(t);
    for (const Monomial& gm : g.terms()) {
      Monomial p;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<std::uint16_t>(t[i] + gm[i]);
      if (auto it = rem.find(p); it != rem.end())
        rem.erase(it);
      else
        rem.insert(p);
    }
  }
  return MPoly::from_terms(k, std::move(quotient));
}

MPoly fk_sym(int k, bool allow_k5) {
  const int cap = allow_k5 ? 5 : kQuotientSymbolicCap;
  if (k < 1 || k > cap)
    throw Error(ErrorCode::LimitExceeded, "symbolic F_k is capped at k = " + std::to_string(cap));
  return exact_div(moore1_sym(k), moore_sym(k));
}

Fe eval_sym(const MPoly& f, std::span<const Fe> point, const Field& field) {
  const int k = f.num_vars();
  if (static_cast<int>(point.size()) != k)
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) + " coordinates, expected " +
                                              std::to_string(k));
  std::array<int, MPoly::kMaxVars> max_exp{};
  for (const Monomial& m : f.terms())
    for (int i = 0; i < k; ++i) max_exp[static_cast<std::size_t>(i)] = std::max<int>(max_exp[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(i)]);
  std::array<std::vector<Fe>, MPoly::kMaxVars> powers;
  for (int i = 0; i < k; ++i) {
    auto& pw = powers[static_cast<std::size_t>(i)];
    pw.resize(static_cast<std::size_t>(max_exp[static_cast<std::size_t>(i)]) + 1);
    pw[0] = Fe{1};
    for (std::size_t e = 1; e < pw.size(); ++e) pw[e] = field.mul(pw[e - 1], point[static_cast<std::size_t>(i)]);
  }
  Fe sum{};
  for (const Monomial& m : f.terms()) {
    Fe t{1};
    for (int i = 0; i < k && !t.is_zero(); ++i) t = field.mul(t, powers[static_cast<std::size_t>(i)][m[static_cast<std::size_t>(i)]]);
    sum += t;
  }
  return sum;
}

bool is_symmetric(const MPoly& f) {
  const int k = f.num_vars();
  std::vector<int> perm(static_cast<std::size_t>(k));
  for (int i = 0; i + 1 < k; ++i) {
    for (int j = 0; j < k; ++j) perm[static_cast<std::size_t>(j)] = j;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    if (f.permuted(perm) != f) return false;
  }
  return true;
}

bool linear_form_divides(const MPoly& f, std::uint32_t form) {
  const int k = f.num_vars();
  if (form == 0 || (k < 32 && (form >> k) != 0))
    throw Error(ErrorCode::InvalidArgument, "linear form must be a nonzero vector in F_2^k");
  const int pivot = std::countr_zero(form);
  std::vector<int> others;
  for (int i = pivot + 1; i < k; ++i)
    if ((form >> i) & 1) others.push_back(i);
  std::vector<Monomial> out;
  for (const Monomial& m : f.terms()) {
    const unsigned e = m[static_cast<std::size_t>(pivot)];
    if (e == 0) {
      out.push_back(m);
      continue;
    }
    if (others.empty()) continue;  // X_pivot -> 0
    // (sum of others)^e over F_2: each binary digit of e goes to one variable
    // (multinomial coefficients are odd exactly when no carries occur).
    std::vector<unsigned> digits;
    for (unsigned b = e; b != 0; b &= b - 1) digits.push_back(b & (0u - b));
    std::vector<std::size_t> choice(digits.size(), 0);
    for (;;) {
      Monomial t = m;
      t[static_cast<std::size_t>(pivot)] = 0;
      for (std::size_t d = 0; d < digits.size(); ++d)
        t[static_cast<std::size_t>(others[choice[d]])] = static_cast<std::uint16_t>(t[static_cast<std::size_t>(others[choice[d]])] + digits[d]);
      out.push_back(t);
      std::size_t d = 0;
      while (d < choice.size() && ++choice[d] == others.size()) choice[d++] = 0;
      if (d == choice.size()) break;
    }
  }
  return MPoly::from_terms(k, std::move(out)).is_zero();
}

std::string dump_terms(const MPoly& f) {
  std::ostringstream os;
  for (const Monomial& m : f.terms()) {
    for (int i = 0; i < f.num_vars(); ++i) {
      if (i) os << ' ';
      os << m[static_cast<std::size_t>(i)];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace sumfree
