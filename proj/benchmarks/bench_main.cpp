#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "sumfree/bitlinalg.hpp"
#include "sumfree/gf2n.hpp"
#include "sumfree/pointeval.hpp"
#include "sumfree/subcalc.hpp"
#include "sumfree/zerosum.hpp"

using namespace sumfree;

namespace {

std::vector<Fe> random_elements(const Field& f, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Fe> v(count);
  for (Fe& x : v) x = f.element(rng() | 1);
  return v;
}

void BM_Mul(benchmark::State& state) {
  const Field f = Field::standard(static_cast<int>(state.range(0)));
  const auto v = random_elements(f, 1024, 1);
  Fe acc{1};
  for (auto _ : state) {
    for (Fe x : v) acc = f.mul(acc, x) + Fe{1};
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Mul)->Arg(16)->Arg(17)->Arg(64);

void BM_Inv(benchmark::State& state) {
  const Field f = Field::standard(static_cast<int>(state.range(0)));
  const auto v = random_elements(f, 1024, 2);
  for (auto _ : state) {
    Fe acc{};
    for (Fe x : v) acc += f.inv(x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_Inv)->Arg(16)->Arg(17)->Arg(64);

void BM_ThetaEval(benchmark::State& state) {
  const Field f = Field::standard(20);
  const auto p = random_elements(f, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(theta_eval(p, f));
}
BENCHMARK(BM_ThetaEval)->DenseRange(3, 9, 2);

void BM_FkEval(benchmark::State& state) {
  const Field f = Field::standard(20);
  const auto p = random_elements(f, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(fk_try(p, f));
}
BENCHMARK(BM_FkEval)->DenseRange(3, 9, 2);

void BM_Annihilator(benchmark::State& state) {
  const Field f = Field::standard(24);
  const Subspace e = canonicalize(random_elements(f, static_cast<std::size_t>(state.range(0)), 5), f);
  for (auto _ : state) benchmark::DoNotOptimize(annihilator(e));
}
BENCHMARK(BM_Annihilator)->Arg(3)->Arg(6);

void BM_CheckAllCriteria(benchmark::State& state) {
  const Field f = Field::standard(24);
  const Subspace e = canonicalize(random_elements(f, 5, 6), f);
  for (auto _ : state) benchmark::DoNotOptimize(check_all_criteria(e).consistent());
}
BENCHMARK(BM_CheckAllCriteria);

void BM_CensusSlice(benchmark::State& state) {
  const Field f = Field::standard(7);
  SweepOptions o;
  o.shard_count = 16;
  for (auto _ : state) benchmark::DoNotOptimize(census(CensusPoly::Theta, f, 3, o).zeros_off_delta);
}
BENCHMARK(BM_CensusSlice)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
