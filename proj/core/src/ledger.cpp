#include "sumfree/ledger.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <sstream>

#include "sumfree/cyclotomic.hpp"
#include "sumfree/error.hpp"

namespace sumfree {

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::InK:
      return "IN_K";
    case Status::InSF:
      return "IN_SF";
    case Status::Open:
      break;
  }
  return "OPEN";
}

std::string_view rule_name(Rule r) noexcept {
  switch (r) {
    case Rule::Axiom:
      return "axiom";
    case Rule::Gcd:
      return "gcd";
    case Rule::Symmetry:
      return "symmetry";
    case Rule::Sum:
      return "sum";
    case Rule::Factor:
      return "factor";
    case Rule::Threshold:
      return "threshold";
    case Rule::Witness:
      return "witness";
  }
  return "?";
}

Ledger::Ledger(int n) : n_(n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "ledger needs n >= 2");
}

Status Ledger::status(int k) const {
  const Fact* f = fact(k);
  return f ? f->status : Status::Open;
}

const Fact* Ledger::fact(int k) const {
  auto it = index_.find(k);
  return it == index_.end() ? nullptr : &facts_[it->second];
}

bool Ledger::add(Fact f) {
  if (f.k < 1 || f.k >= n_) throw Error(ErrorCode::InvalidArgument, "order " + std::to_string(f.k) + " out of range");
  if (f.status == Status::Open) throw Error(ErrorCode::InvalidArgument, "OPEN is not a storable fact");
  for (int p : f.premises)
    if (!fact(p)) throw Error(ErrorCode::InvalidArgument, "premise " + std::to_string(p) + " is not in the store");
  if (const Fact* old = fact(f.k)) {
    if (old->status == f.status) return false;
    throw Error(ErrorCode::ContradictionDetected,
                "rule " + std::string(rule_name(f.rule)) + " derives " + std::string(status_name(f.status)) + " for k = " +
                    std::to_string(f.k) + ", n = " + std::to_string(n_) + ", already " + std::string(status_name(old->status)));
  }
  f.seq = facts_.size() + 1;
  index_[f.k] = facts_.size();
  facts_.push_back(std::move(f));
  return true;
}

namespace {

Fact make_fact(int k, Status s, Rule r, std::vector<int> premises, std::string detail) {
  Fact f;
  f.k = k;
  f.status = s;
  f.rule = r;
  f.premises = std::move(premises);
  f.detail = std::move(detail);
  return f;
}

struct AxiomEntry {
  int k;
  Status status;
  const char* detail;
};

std::vector<AxiomEntry> axioms_for(int n) {
  std::vector<AxiomEntry> out;
  out.push_back({1, Status::InSF, "k = 1 is sum-free for every n"});
  out.push_back({n - 1, Status::InSF, "k = n-1 is sum-free for every n"});
  if (n % 2 == 1 && n >= 3) {
    out.push_back({2, Status::InSF, "k = 2 is sum-free for odd n"});
    out.push_back({n - 2, Status::InSF, "k = n-2 is sum-free for odd n"});
  }
  if (n >= 6) out.push_back({3, Status::InK, "k = 3 with 3 <= k <= n-3"});
  if (n >= 7) out.push_back({4, Status::InK, "k = 4 with 3 <= k <= n-3"});
  if (n >= 8) out.push_back({5, Status::InK, "k = 5 for n >= 8"});
  return out;
}

std::string poly_string(u128 p) {
  std::string s;
  for (int d = poly_degree(p); d >= 0; --d) {
    if (!((p >> d) & 1)) continue;
    if (!s.empty()) s += "+";
    s += d == 0 ? "1" : d == 1 ? "X" : "X^" + std::to_string(d);
  }
  return s.empty() ? "0" : s;
}

/// For each k, some subset of `factors` with degree sum k and zero X
/// coefficient in the product (constant terms are all 1, so that
/// coefficient is the XOR of the factors' X coefficients).
std::vector<std::optional<u128>> zero_x_products(int n, const std::vector<CyclotomicFactor>& factors) {
  const std::size_t r = factors.size();
  // reach[i][d][p]: some subset of the first i factors has degree d, X bit p.
  std::vector<std::vector<std::array<bool, 2>>> reach(r + 1, std::vector<std::array<bool, 2>>(static_cast<std::size_t>(n) + 1, {false, false}));
  reach[0][0][0] = true;
  for (std::size_t i = 0; i < r; ++i) {
    const int d = factors[i].degree();
    const int c = static_cast<int>((factors[i].poly >> 1) & 1);
    for (int s = 0; s <= n; ++s)
      for (int p = 0; p < 2; ++p) {
        if (!reach[i][static_cast<std::size_t>(s)][static_cast<std::size_t>(p)]) continue;
        reach[i + 1][static_cast<std::size_t>(s)][static_cast<std::size_t>(p)] = true;
        if (s + d <= n) reach[i + 1][static_cast<std::size_t>(s + d)][static_cast<std::size_t>(p ^ c)] = true;
      }
  }
  std::vector<std::optional<u128>> out(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) {
    if (!reach[r][static_cast<std::size_t>(k)][0]) continue;
    u128 prod = 1;
    int s = k, p = 0;
    for (std::size_t i = r; i > 0; --i) {
      if (reach[i - 1][static_cast<std::size_t>(s)][static_cast<std::size_t>(p)]) continue;
      prod = poly_mul(prod, factors[i - 1].poly);
      s -= factors[i - 1].degree();
      p ^= static_cast<int>((factors[i - 1].poly >> 1) & 1);
    }
    out[static_cast<std::size_t>(k)] = prod;
  }
  return out;
}

bool factor_side_condition(int n, int k, u128 poly) {
  if (n % 2 == 0 || n > 127 || poly_degree(poly) != k) return false;
  if ((poly & 1) == 0 || ((poly >> 1) & 1) != 0) return false;
  const u128 target = (u128{1} << n) | 1;
  return poly_divmod(target, poly).second == 0;
}

constexpr int kFactorMaxN = 127;

}  // namespace

int seed_axioms(Ledger& l) {
  int added = 0;
  for (const AxiomEntry& a : axioms_for(l.n()))
    if (a.k >= 1 && a.k < l.n() && l.add(make_fact(a.k, a.status, Rule::Axiom, {}, a.detail))) ++added;
  return added;
}

int rule_gcd(Ledger& l) {
  int added = 0;
  for (int k = 1; k < l.n(); ++k) {
    const int g = std::gcd(k, l.n());
    if (g > 1 && l.add(make_fact(k, Status::InK, Rule::Gcd, {}, "gcd(" + std::to_string(k) + ", n) = " + std::to_string(g))))
      ++added;
  }
  return added;
}

int rule_symmetry(Ledger& l) {
  int added = 0;
  const std::vector<Fact> snapshot = l.facts();
  for (const Fact& f : snapshot) {
    const int m = l.n() - f.k;
    if (l.add(make_fact(m, f.status, Rule::Symmetry, {f.k}, "n - " + std::to_string(f.k)))) ++added;
  }
  return added;
}

int rule_sum(Ledger& l) {
  int added = 0;
  const int n = l.n();
  for (int a = 1; a < n; ++a) {
    if (l.status(a) != Status::InK) continue;
    for (int b = a; a + b < n && a * b < n; ++b) {
      if (l.status(b) != Status::InK) continue;
      const std::string detail = std::to_string(a) + " + " + std::to_string(b) + ", " + std::to_string(a) + " * " +
                                 std::to_string(b) + " = " + std::to_string(a * b) + " < n";
      if (l.add(make_fact(a + b, Status::InK, Rule::Sum, {a, b}, detail))) ++added;
    }
  }
  return added;
}

std::optional<u128> factor_with_zero_x_coeff(int n, int k) {
  if (n % 2 == 0 || k < 1 || k > n) return std::nullopt;
  return zero_x_products(n, factor_x_n_minus_1(n))[static_cast<std::size_t>(k)];
}

int rule_factor(Ledger& l) {
  const int n = l.n();
  if (n % 2 == 0) return 0;
  if (n > kFactorMaxN) throw Error(ErrorCode::SplittingFieldTooLarge, "factor rule is limited to n <= 127");
  const auto products = zero_x_products(n, factor_x_n_minus_1(n));
  int added = 0;
  for (int k = 2; k <= n - 2; ++k) {
    const auto& p = products[static_cast<std::size_t>(k)];
    if (!p || l.status(k) == Status::InK) continue;
    Fact f = make_fact(k, Status::InK, Rule::Factor, {}, poly_string(*p) + " divides X^n-1, X coefficient 0");
    f.factor = *p;
    if (l.add(std::move(f))) ++added;
  }
  return added;
}

ThresholdReport threshold_exact(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "threshold needs k >= 1");
  ThresholdReport r;
  r.k = k;
  r.exact_bound = (13.0 * k - 19.0) * std::log2(1.0 + std::sqrt(21.0)) / 3.0;
  r.simplified_bound = 10.8 * k - 15.7;
  const double km1 = k - 1;
  const double disc = std::exp2(4 * km1) + 20.0 * std::exp2(13.0 * km1 / 3.0) + std::exp2(2.0 * k + 2.0);
  const double y0 = (std::exp2(2 * km1) + std::sqrt(disc)) / 2.0;
  r.quadratic_root_bound = 2.0 * std::log2(y0);
  return r;
}

int threshold_min_n(int k) { return static_cast<int>(std::ceil(threshold_exact(k).exact_bound)); }

double lemma52_root() {
  const double c = 5.0 * std::pow(16.0, 13.0 / 3.0) + 31.0 * 31.0;
  auto g = [c](double n) { return std::exp2(n) - 210.0 * std::exp2(n / 2.0) - c; };
  double lo = 0.0, hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = (lo + hi) / 2.0;
    (g(mid) < 0 ? lo : hi) = mid;
  }
  return (lo + hi) / 2.0;
}

int rule_threshold(Ledger& l) {
  int added = 0;
  for (int k = 3; k < l.n(); ++k) {
    const int need = threshold_min_n(k);
    if (l.n() < need) break;
    std::ostringstream d;
    d.precision(6);
    d << "n >= " << threshold_exact(k).exact_bound;
    if (l.add(make_fact(k, Status::InK, Rule::Threshold, {}, d.str()))) ++added;
  }
  return added;
}

int rule_witness_import(Ledger& l, std::span<const Witness> witnesses) {
  int added = 0;
  for (const Witness& w : witnesses) {
    if (w.n != l.n() || w.k < 1 || w.k >= l.n()) continue;
    bool ok = false;
    try {
      ok = verify_witness(w);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) continue;
    Fact f = make_fact(w.k, Status::InK, Rule::Witness, {},
                       std::string(strategy_name(w.strategy)) + " search, seed " + std::to_string(w.seed));
    f.witness = w;
    if (l.add(std::move(f))) ++added;
  }
  return added;
}

std::vector<Rule> default_rule_order() {
  return {Rule::Gcd, Rule::Symmetry, Rule::Sum, Rule::Factor, Rule::Threshold, Rule::Witness};
}

Ledger derive(int n, std::span<const Witness> witnesses) { return derive(n, witnesses, default_rule_order()); }

Ledger derive(int n, std::span<const Witness> witnesses, std::span<const Rule> order) {
  Ledger l(n);
  seed_axioms(l);
  bool factor_ok = n % 2 == 1;
  if (factor_ok && n > kFactorMaxN) {
    l.note("factor rule skipped: n > 127");
    factor_ok = false;
  }
  for (;;) {
    int added = 0;
    for (Rule r : order) {
      switch (r) {
        case Rule::Axiom:
          added += seed_axioms(l);
          break;
        case Rule::Gcd:
          added += rule_gcd(l);
          break;
        case Rule::Symmetry:
          added += rule_symmetry(l);
          break;
        case Rule::Sum:
          added += rule_sum(l);
          break;
        case Rule::Factor:
          if (!factor_ok) break;
          try {
            added += rule_factor(l);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::SplittingFieldTooLarge) throw;
            l.note(std::string("factor rule skipped: ") + e.what());
            factor_ok = false;
          }
          break;
        case Rule::Threshold:
          added += rule_threshold(l);
          break;
        case Rule::Witness:
          added += rule_witness_import(l, witnesses);
          break;
      }
    }
    if (added == 0) break;
  }
  return l;
}

AuditResult audit(const Ledger& l) {
  AuditResult res;
  const int n = l.n();
  std::map<int, const Fact*> seen;
  auto fail = [&](const Fact& f, const std::string& why) {
    res.ok = false;
    res.failures.push_back("k = " + std::to_string(f.k) + " (" + std::string(rule_name(f.rule)) + "): " + why);
  };
  const std::vector<AxiomEntry> axioms = axioms_for(n);
  for (const Fact& f : l.facts()) {
    for (int p : f.premises) {
      auto it = seen.find(p);
      if (it == seen.end() || it->second->seq >= f.seq) fail(f, "premise " + std::to_string(p) + " missing or later");
    }
    auto premise_status = [&](int p) {
      auto it = seen.find(p);
      return it == seen.end() ? Status::Open : it->second->status;
    };
    switch (f.rule) {
      case Rule::Axiom: {
        const bool listed = std::any_of(axioms.begin(), axioms.end(),
                                        [&](const AxiomEntry& a) { return a.k == f.k && a.status == f.status; });
        if (!listed) fail(f, "not an axiom for this n");
        break;
      }
      case Rule::Gcd:
        if (f.status != Status::InK || std::gcd(f.k, n) == 1) fail(f, "gcd side-condition fails");
        break;
      case Rule::Symmetry:
        if (f.premises.size() != 1 || f.premises[0] != n - f.k || premise_status(f.premises[0]) != f.status)
          fail(f, "symmetry premise does not match");
        break;
      case Rule::Sum:
        if (f.status != Status::InK || f.premises.size() != 2 || f.premises[0] + f.premises[1] != f.k ||
            f.premises[0] * f.premises[1] >= n || premise_status(f.premises[0]) != Status::InK ||
            premise_status(f.premises[1]) != Status::InK)
          fail(f, "sum side-condition fails");
        break;
      case Rule::Factor:
        if (f.status != Status::InK || !factor_side_condition(n, f.k, f.factor))
          fail(f, "recorded factor " + poly_string(f.factor) + " does not qualify");
        break;
      case Rule::Threshold:
        if (f.status != Status::InK || f.k < 3 || n < threshold_min_n(f.k)) fail(f, "threshold not met");
        break;
      case Rule::Witness: {
        bool ok = f.status == Status::InK && f.witness && f.witness->n == n && f.witness->k == f.k;
        try {
          ok = ok && verify_witness(*f.witness);
        } catch (const Error&) {
          ok = false;
        }
        if (!ok) fail(f, "witness does not re-verify");
        break;
      }
    }
    if (seen.count(f.k)) fail(f, "duplicate fact");
    seen[f.k] = &f;
  }
  return res;
}

std::string ledger_csv(const Ledger& l) {
  std::ostringstream out;
  out << "n,k,status,rule,premises\n";
  for (int k = 1; k < l.n(); ++k) {
    out << l.n() << ',' << k << ',';
    if (const Fact* f = l.fact(k)) {
      out << status_name(f->status) << ',' << rule_name(f->rule) << ',';
      for (std::size_t i = 0; i < f->premises.size(); ++i) out << (i ? ";" : "") << f->premises[i];
    } else {
      out << "OPEN,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string ledger_text(const Ledger& l) {
  std::ostringstream out;
  out << "n = " << l.n() << "\n";
  for (int k = 1; k < l.n(); ++k) {
    out << "  k = " << k << ": ";
    const Fact* f = l.fact(k);
    if (!f) {
      out << "OPEN\n";
      continue;
    }
    out << status_name(f->status) << " by " << rule_name(f->rule) << " #" << f->seq;
    if (!f->premises.empty()) {
      out << " from";
      for (int p : f->premises) out << " k=" << p << " (#" << l.fact(p)->seq << ")";
    }
    out << "; " << f->detail << "\n";
  }
  for (const std::string& s : l.notes()) out << "note: " << s << "\n";
  return out.str();
}

}  // namespace sumfree
