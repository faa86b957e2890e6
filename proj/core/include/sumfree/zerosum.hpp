#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sumfree/bitlinalg.hpp"
#include "sumfree/gf2n.hpp"

namespace sumfree {

/// Default cap on subspaces-times-elements for exhaustive sweeps.
inline constexpr u128 kDefaultWorkBudget = u128{1} << 36;
/// Largest n*k for a full tuple census.
inline constexpr int kCensusMaxBits = 28;

/// Sum of 1/u over the nonzero elements of the span of `basis`.
Fe inverse_sum(std::span<const std::uint64_t> basis, const Field& f);
/// Dimension 1..30.
Fe inverse_sum(const Subspace& e);
bool is_zero_sum(const Subspace& e);

struct CriteriaReport {
  Fe inverse_sum{};
  Fe fk{};     // F_k on the canonical basis of E
  Fe theta{};  // Theta_k on the canonical basis of gamma(E)
  Subspace gamma_image;

  bool zero_sum() const noexcept { return inverse_sum.is_zero(); }
  bool fk_zero() const noexcept { return fk.is_zero(); }
  bool theta_zero() const noexcept { return theta.is_zero(); }
  /// All three predicates agree.
  bool consistent() const noexcept { return zero_sum() == fk_zero() && fk_zero() == theta_zero(); }
};

/// Evaluates the three zero-sum predicates; 1 <= dim E <= 11.
CriteriaReport check_all_criteria(const Subspace& e);

struct SweepOptions {
  int workers = 1;
  u128 budget = kDefaultWorkBudget;
  /// Restricts the sweep to part shard_index of shard_count equal index
  /// ranges; counts from all parts add up to the full result.
  int shard_index = 0;
  int shard_count = 1;
};

/// Exact number of k-dimensional zero-sum subspaces of F_{2^n}. Throws
/// LimitExceeded when [n choose k]_2 * 2^k exceeds the budget.
u128 zk_count(const Field& f, int k, const SweepOptions& opts = {});

enum class CensusPoly { Fk, Theta };

std::string_view census_poly_name(CensusPoly p) noexcept;
/// "fk" or "theta"; throws InvalidArgument.
CensusPoly parse_census_poly(std::string_view name);

struct CensusResult {
  int n = 0;
  int k = 0;
  CensusPoly poly = CensusPoly::Fk;
  u128 zeros_off_delta = 0;
  /// Zeros with Delta = 0; absent when not computed (F_k with k > 4).
  std::optional<u128> zeros_on_delta;
  u128 swept = 0;
};

/// Counts zeros of the selected polynomial over all of (F_{2^n})^k, split
/// by whether Delta vanishes. n * k <= 28; sharded over the first
/// coordinate.
CensusResult census(CensusPoly poly, const Field& f, int k, const SweepOptions& opts = {});

std::string census_csv_header();
std::string census_csv_row(const CensusResult& r);

enum class SearchStrategy { Random, Exhaustive };

std::string_view strategy_name(SearchStrategy s) noexcept;
SearchStrategy parse_strategy(std::string_view name);

struct WitnessChecks {
  bool inverse_sum = false;
  bool fk = false;
  bool theta = false;

  friend bool operator==(const WitnessChecks&, const WitnessChecks&) = default;
};

/// A verified zero-sum subspace with its search provenance.
struct Witness {
  int n = 0;
  u128 modulus = 0;
  int k = 0;
  std::vector<std::uint64_t> basis;  // canonical RREF rows
  WitnessChecks checks;
  SearchStrategy strategy = SearchStrategy::Random;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;

  Field field() const { return Field(n, modulus); }
  Subspace subspace() const;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Re-canonicalizes and re-runs all three criteria; true iff every check
/// passes and the stored basis is canonical.
bool verify_witness(const Witness& w);

struct SearchOptions {
  SearchStrategy strategy = SearchStrategy::Random;
  /// Random: number of tuples drawn. Exhaustive: work budget as for zk_count.
  u128 budget = u128{1} << 24;
  std::uint64_t seed = 1;
  int workers = 1;
};

/// Returns a witness verified by check_all_criteria, or nullopt if none was
/// found within the budget. Exhaustive search returns the first zero-sum
/// subspace in enumeration order and throws LimitExceeded past the budget.
std::optional<Witness> find_witness(const Field& f, int k, const SearchOptions& opts);

struct SfEntry {
  int k = 0;
  bool sum_free = false;
  std::string method;  // "witness" or "exhaustion"
  std::uint64_t trials = 0;
  std::optional<Witness> witness;
};

struct SfTableOptions {
  /// Random trials per k are random_factor * 2^n.
  std::uint64_t random_factor = 16;
  std::uint64_t seed = 1;
  int workers = 1;
  u128 budget = kDefaultWorkBudget;
};

/// Classifies every 1 <= k <= n-1 by witness search, falling back to
/// exhaustion to certify sum-freeness.
std::vector<SfEntry> sf_table(const Field& f, const SfTableOptions& opts = {});

/// JSON-lines witness store.
std::string witness_to_json(const Witness& w);
Witness witness_from_json(std::string_view line);
std::vector<Witness> read_witness_store(const std::string& path);
void append_witness(const std::string& path, const Witness& w);

}  // namespace sumfree
