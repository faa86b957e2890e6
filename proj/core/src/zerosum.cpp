#include "sumfree/zerosum.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <string>
#include <thread>

#include "sumfree/error.hpp"
#include "sumfree/pointeval.hpp"
#include "sumfree/subcalc.hpp"
#include "sumfree/sympoly.hpp"

namespace sumfree {

namespace {

/// Splits [0, total) into `workers` contiguous ranges and runs
/// fn(shard, begin, end) for each, on its own thread when workers > 1.
template <class Fn>
void run_sharded(u128 total, int workers, Fn&& fn) {
  const int w = std::max(1, workers);
  if (w == 1 || total < static_cast<u128>(w)) {
    fn(0, u128{0}, total);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(w));
  for (int s = 0; s < w; ++s) {
    const u128 begin = total * static_cast<u128>(s) / static_cast<u128>(w);
    const u128 end = total * static_cast<u128>(s + 1) / static_cast<u128>(w);
    threads.emplace_back([&fn, s, begin, end] { fn(s, begin, end); });
  }
  for (auto& t : threads) t.join();
}

u128 exhaustive_work(int n, int k) {
  const u128 count = gaussian_binomial(n, k);
  if (k >= 64 || (count >> (127 - k)) != 0) return std::numeric_limits<u128>::max();
  return count << k;
}

std::pair<u128, u128> shard_range(u128 total, const SweepOptions& o) {
  if (o.shard_count < 1 || o.shard_index < 0 || o.shard_index >= o.shard_count)
    throw Error(ErrorCode::InvalidArgument, "shard index must satisfy 0 <= index < total");
  const auto t = static_cast<u128>(o.shard_count);
  const auto i = static_cast<u128>(o.shard_index);
  return {total * i / t, total * (i + 1) / t};
}

void check_budget(const Field& f, int k, u128 budget) {
  u128 work = 0;
  try {
    work = exhaustive_work(f.n(), k);
  } catch (const Error&) {
    work = std::numeric_limits<u128>::max();
  }
  if (work > budget)
    throw Error(ErrorCode::LimitExceeded, "exhaustive sweep over k = " + std::to_string(k) + " subspaces of F_2^" +
                                              std::to_string(f.n()) + " exceeds the work budget");
}

}  // namespace

Fe inverse_sum(std::span<const std::uint64_t> basis, const Field& f) {
  Fe acc{};
  for_each_element(basis, [&](Fe x) {
    if (!x.is_zero()) acc += f.inv(x);
  });
  return acc;
}

Fe inverse_sum(const Subspace& e) {
  if (e.dim() < 1 || e.dim() > 30) throw Error(ErrorCode::LimitExceeded, "inverse_sum needs 1 <= dim <= 30");
  return inverse_sum(e.basis().data(), e.field());
}

bool is_zero_sum(const Subspace& e) { return inverse_sum(e).is_zero(); }

CriteriaReport check_all_criteria(const Subspace& e) {
  if (e.dim() < 1 || e.dim() > kThetaEvalCap)
    throw Error(ErrorCode::LimitExceeded, "criteria check needs 1 <= dim <= 11");
  const Field& f = e.field();
  const std::vector<Fe> basis = e.basis_elements();
  Subspace g = gamma(e);
  const std::vector<Fe> gbasis = g.basis_elements();
  return CriteriaReport{inverse_sum(e), fk_eval(basis, f), theta_eval(gbasis, f), std::move(g)};
}

u128 zk_count(const Field& f, int k, const SweepOptions& opts) {
  if (k < 1 || k > f.n()) throw Error(ErrorCode::InvalidArgument, "zk_count needs 1 <= k <= n");
  check_budget(f, k, opts.budget);
  const auto [lo, hi] = shard_range(gaussian_binomial(f.n(), k), opts);
  std::vector<u128> counts(static_cast<std::size_t>(std::max(1, opts.workers)), 0);
  run_sharded(hi - lo, opts.workers, [&](int shard, u128 begin, u128 end) {
    SubspaceEnumerator it(f, k, lo + begin, lo + end);
    u128 c = 0;
    while (it.next())
      if (inverse_sum(it.rows(), f).is_zero()) ++c;
    counts[static_cast<std::size_t>(shard)] = c;
  });
  u128 sum = 0;
  for (u128 c : counts) sum += c;
  return sum;
}

std::string_view census_poly_name(CensusPoly p) noexcept { return p == CensusPoly::Fk ? "fk" : "theta"; }

CensusPoly parse_census_poly(std::string_view name) {
  if (name == "fk") return CensusPoly::Fk;
  if (name == "theta") return CensusPoly::Theta;
  throw Error(ErrorCode::InvalidArgument, "unknown census polynomial '" + std::string(name) + "'");
}

CensusResult census(CensusPoly poly, const Field& f, int k, const SweepOptions& opts) {
  const int n = f.n();
  if (k < 1 || k > n) throw Error(ErrorCode::InvalidArgument, "census needs 1 <= k <= n");
  if (n * k > kCensusMaxBits) throw Error(ErrorCode::LimitExceeded, "census sweeps are capped at n*k = 28");
  if (poly == CensusPoly::Theta && k > kThetaEvalCap)
    throw Error(ErrorCode::LimitExceeded, "theta evaluation is capped at k = 11");
  const bool on_delta = poly == CensusPoly::Theta || k <= kQuotientSymbolicCap;
  std::optional<MPoly> fk_poly;
  if (poly == CensusPoly::Fk && on_delta) fk_poly = fk_sym(k);

  const std::uint64_t side = std::uint64_t{1} << n;
  const std::uint64_t inner = std::uint64_t{1} << (n * (k - 1));
  const int w = std::max(1, opts.workers);
  std::vector<u128> off(static_cast<std::size_t>(w), 0), on(static_cast<std::size_t>(w), 0);
  const auto [lo, hi] = shard_range(side, opts);
  run_sharded(hi - lo, w, [&](int shard, u128 begin, u128 end) {
    std::vector<Fe> pts(static_cast<std::size_t>(k));
    u128 off_c = 0, on_c = 0;
    for (auto x0 = static_cast<std::uint64_t>(lo + begin); x0 < static_cast<std::uint64_t>(lo + end); ++x0) {
      pts[0] = Fe{x0};
      for (std::uint64_t rest = 0; rest < inner; ++rest) {
        std::uint64_t r = rest;
        for (int j = 1; j < k; ++j) {
          pts[static_cast<std::size_t>(j)] = Fe{r & f.mask()};
          r >>= n;
        }
        const bool dependent = delta_eval(pts, f).is_zero();
        if (!dependent) {
          const Fe v = poly == CensusPoly::Fk ? delta1_eval(pts, f) : theta_eval(pts, f);
          if (v.is_zero()) ++off_c;
        } else if (on_delta) {
          const Fe v = poly == CensusPoly::Fk ? eval_sym(*fk_poly, pts, f) : theta_eval(pts, f);
          if (v.is_zero()) ++on_c;
        }
      }
    }
    off[static_cast<std::size_t>(shard)] = off_c;
    on[static_cast<std::size_t>(shard)] = on_c;
  });
  CensusResult res;
  res.n = n;
  res.k = k;
  res.poly = poly;
  res.swept = (hi - lo) * static_cast<u128>(inner);
  for (u128 c : off) res.zeros_off_delta += c;
  if (on_delta) {
    u128 s = 0;
    for (u128 c : on) s += c;
    res.zeros_on_delta = s;
  }
  return res;
}

std::string census_csv_header() { return "n,k,selector,zeros_off_delta,zeros_on_delta,swept"; }

std::string census_csv_row(const CensusResult& r) {
  return std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::string(census_poly_name(r.poly)) + "," +
         to_decimal(r.zeros_off_delta) + "," +
         (r.zeros_on_delta ? to_decimal(*r.zeros_on_delta) : std::string("not-computed")) + "," +
         to_decimal(r.swept);
}

std::string_view strategy_name(SearchStrategy s) noexcept {
  return s == SearchStrategy::Random ? "random" : "exhaustive";
}

SearchStrategy parse_strategy(std::string_view name) {
  if (name == "random") return SearchStrategy::Random;
  if (name == "exhaustive") return SearchStrategy::Exhaustive;
  throw Error(ErrorCode::InvalidArgument, "unknown search strategy '" + std::string(name) + "'");
}

Subspace Witness::subspace() const {
  const Field f = field();
  std::vector<Fe> v;
  for (std::uint64_t w : basis) v.push_back(Fe{w});
  return canonicalize(v, f);
}

bool verify_witness(const Witness& w) {
  const Subspace e = w.subspace();
  if (e.dim() != w.k || static_cast<int>(w.basis.size()) != w.k) return false;
  if (!std::equal(w.basis.begin(), w.basis.end(), e.basis().data().begin())) return false;
  const CriteriaReport r = check_all_criteria(e);
  return r.zero_sum() && r.fk_zero() && r.theta_zero() && w.checks == WitnessChecks{true, true, true};
}

namespace {

Witness make_witness(const Subspace& e, SearchStrategy s, std::uint64_t seed, std::uint64_t trials) {
  const CriteriaReport r = check_all_criteria(e);
  if (!r.consistent())
    throw Error(ErrorCode::ContradictionDetected, "zero-sum criteria disagree on a search result");
  Witness w;
  w.n = e.field().n();
  w.modulus = e.field().modulus();
  w.k = e.dim();
  w.basis.assign(e.basis().data().begin(), e.basis().data().end());
  w.checks = {r.zero_sum(), r.fk_zero(), r.theta_zero()};
  w.strategy = s;
  w.seed = seed;
  w.trials = trials;
  return w;
}

}  // namespace

std::optional<Witness> find_witness(const Field& f, int k, const SearchOptions& opts) {
  if (k < 1 || k > f.n()) throw Error(ErrorCode::InvalidArgument, "witness search needs 1 <= k <= n");
  if (opts.strategy == SearchStrategy::Random) {
    std::mt19937_64 rng(opts.seed);
    std::vector<Fe> draw(static_cast<std::size_t>(k));
    for (u128 t = 0; t < opts.budget; ++t) {
      for (Fe& x : draw) x = f.element(rng());
      const Subspace e = canonicalize(draw, f);
      if (e.dim() != k || !is_zero_sum(e)) continue;
      return make_witness(e, opts.strategy, opts.seed, static_cast<std::uint64_t>(t + 1));
    }
    return std::nullopt;
  }
  check_budget(f, k, opts.budget);
  const u128 total = gaussian_binomial(f.n(), k);
  constexpr u128 kNone = std::numeric_limits<u128>::max();
  // Lowest enumeration index of a zero-sum subspace seen by any shard.
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  const int w = std::max(1, opts.workers);
  std::vector<u128> found(static_cast<std::size_t>(w), kNone);
  run_sharded(total, w, [&](int shard, u128 begin, u128 end) {
    SubspaceEnumerator it(f, k, begin, end);
    while (it.next()) {
      if (it.index() > best.load(std::memory_order_relaxed)) return;
      if (inverse_sum(it.rows(), f).is_zero()) {
        found[static_cast<std::size_t>(shard)] = it.index();
        auto idx = static_cast<std::uint64_t>(it.index());
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  });
  const u128 first = *std::min_element(found.begin(), found.end());
  if (first == kNone) return std::nullopt;
  SubspaceEnumerator it(f, k, first, first + 1);
  it.next();
  return make_witness(it.current(), opts.strategy, opts.seed, static_cast<std::uint64_t>(first + 1));
}

std::vector<SfEntry> sf_table(const Field& f, const SfTableOptions& opts) {
  const int n = f.n();
  std::vector<SfEntry> out;
  for (int k = 1; k < n; ++k) {
    SfEntry e;
    e.k = k;
    SearchOptions rs;
    rs.strategy = SearchStrategy::Random;
    rs.budget = static_cast<u128>(opts.random_factor) << n;
    rs.seed = opts.seed;
    if (auto w = find_witness(f, k, rs)) {
      e.method = "witness";
      e.trials = w->trials;
      e.witness = std::move(w);
    } else {
      SearchOptions ex;
      ex.strategy = SearchStrategy::Exhaustive;
      ex.budget = opts.budget;
      ex.seed = opts.seed;
      ex.workers = opts.workers;
      e.method = "exhaustion";
      e.trials = static_cast<std::uint64_t>(rs.budget);
      if (auto w2 = find_witness(f, k, ex)) {
        e.witness = std::move(w2);
      } else {
        e.sum_free = true;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace sumfree
