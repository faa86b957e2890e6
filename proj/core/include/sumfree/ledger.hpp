#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumfree/gf2n.hpp"
#include "sumfree/zerosum.hpp"

namespace sumfree {

enum class Status { Open, InK, InSF };
enum class Rule { Axiom, Gcd, Symmetry, Sum, Factor, Threshold, Witness };

std::string_view status_name(Status s) noexcept;  // "OPEN", "IN_K", "IN_SF"
std::string_view rule_name(Rule r) noexcept;      // "axiom", "gcd", ...

/// One derived membership "k in K_n" or "k in SF_n".
struct Fact {
  int k = 0;
  Status status = Status::Open;
  Rule rule = Rule::Axiom;
  std::vector<int> premises;  // orders whose facts this one depends on
  std::string detail;         // human-readable rule parameters
  u128 factor = 0;            // divisor of X^n - 1 (factor rule)
  std::optional<Witness> witness;
  std::uint64_t seq = 0;      // insertion order, starting at 1
};

/// Single-writer fact store for one n.
class Ledger {
 public:
  explicit Ledger(int n);

  int n() const noexcept { return n_; }
  Status status(int k) const;
  const Fact* fact(int k) const;
  /// Facts in insertion order.
  const std::vector<Fact>& facts() const noexcept { return facts_; }
  /// Remarks about rules that were skipped.
  const std::vector<std::string>& notes() const noexcept { return notes_; }
  void note(std::string s) { notes_.push_back(std::move(s)); }

  /// Inserts a fact unless one with the same status already exists; returns
  /// whether it was new. Throws ContradictionDetected on a status clash and
  /// InvalidArgument when k is out of range or a premise is missing.
  bool add(Fact f);

 private:
  int n_;
  std::vector<Fact> facts_;
  std::map<int, std::size_t> index_;
  std::vector<std::string> notes_;
};

/// Each rule returns the number of new facts it added.
int seed_axioms(Ledger& l);
int rule_gcd(Ledger& l);
int rule_symmetry(Ledger& l);
int rule_sum(Ledger& l);
/// Odd n only (no-op otherwise): k in K_n when a product of distinct
/// irreducible factors of X^n - 1 has degree k and zero X coefficient.
int rule_factor(Ledger& l);
int rule_threshold(Ledger& l);
/// Imports witnesses for this n after re-verifying them.
int rule_witness_import(Ledger& l, std::span<const Witness> witnesses);

/// A product of distinct irreducible factors of X^n - 1 with degree k and
/// zero X coefficient, if one exists.
std::optional<u128> factor_with_zero_x_coeff(int n, int k);

struct ThresholdReport {
  int k = 0;
  double exact_bound = 0;           // (13k - 19) log2(1 + sqrt 21) / 3
  double simplified_bound = 0;      // 10.8k - 15.7
  double quadratic_root_bound = 0;  // 2 log2(y0)
};

ThresholdReport threshold_exact(int k);
/// Smallest n with n >= exact_bound(k).
int threshold_min_n(int k);
/// Root of 2^n - 210 2^(n/2) - (5 16^(13/3) + 31^2) on (0, 40) by bisection.
double lemma52_root();

/// The default rule order used by derive.
std::vector<Rule> default_rule_order();

/// Axioms, then the given rules (and witness imports) repeatedly until no
/// rule adds a fact.
Ledger derive(int n, std::span<const Witness> witnesses = {});
Ledger derive(int n, std::span<const Witness> witnesses, std::span<const Rule> order);

struct AuditResult {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Replays every justification: premises exist and precede the fact, rule
/// side-conditions hold, witnesses re-verify.
AuditResult audit(const Ledger& l);

/// Header "n,k,status,rule,premises" then one row per 1 <= k <= n-1.
std::string ledger_csv(const Ledger& l);
/// Justification listing, one line per k.
std::string ledger_text(const Ledger& l);

}  // namespace sumfree
