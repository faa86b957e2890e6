#include <cstdio>
#include <filesystem>
#include <random>
#include <set>

#include "doctest.h"
#include "support/oracles.hpp"
#include "sumfree/error.hpp"
#include "sumfree/pointeval.hpp"
#include "sumfree/sympoly.hpp"
#include "sumfree/zerosum.hpp"

using namespace sumfree;

TEST_CASE("inverse sum on small cases") {
  const Field f = Field::standard(4);
  // Every 1-dimensional subspace has sum 1/u != 0.
  for (std::uint64_t u = 1; u < 16; ++u) CHECK_FALSE(is_zero_sum(canonicalize(std::vector<Fe>{Fe{u}}, f)));
  // The whole field sums to 0 (n >= 2).
  std::vector<Fe> all;
  for (int j = 0; j < 4; ++j) all.push_back(f.x_pow(j));
  CHECK(is_zero_sum(canonicalize(all, f)));
}

TEST_CASE("zero-sum count against brute force") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k <= n && n * k <= 18; ++k) {
      const Field f = Field::standard(n);
      CHECK(zk_count(f, k) == static_cast<u128>(oracle::zk_brute(f, k)));
    }
  CHECK(zk_count(Field::standard(4), 2) == 5);
  CHECK(zk_count(Field::standard(7), 3) == 127);
}

TEST_CASE("zero-sum count is sharding- and worker-independent") {
  const Field f = Field::standard(9);
  const u128 whole = zk_count(f, 3);
  u128 parts = 0;
  for (int s = 0; s < 5; ++s) {
    SweepOptions o;
    o.shard_index = s;
    o.shard_count = 5;
    parts += zk_count(f, 3, o);
  }
  CHECK(parts == whole);
  SweepOptions o;
  o.workers = 4;
  CHECK(zk_count(f, 3, o) == whole);
}

TEST_CASE("budget is enforced") {
  SweepOptions o;
  o.budget = 1000;
  CHECK_THROWS_AS(zk_count(Field::standard(9), 3, o), Error);
  CHECK_THROWS_AS(census(CensusPoly::Fk, Field::standard(10), 3), Error);
}

TEST_CASE("criteria agree on every subspace for small n") {
  for (int n = 3; n <= 8; ++n) {
    const Field f = Field::standard(n);
    for (int k = 1; k <= 3 && k <= n; ++k) {
      SubspaceEnumerator it(f, k);
      while (it.next()) {
        const auto r = check_all_criteria(it.current());
        CHECK(r.consistent());
        CHECK(r.gamma_image.dim() == k);
      }
    }
  }
}

TEST_CASE("criteria agree on random larger subspaces") {
  std::mt19937_64 rng(30);
  for (int rep = 0; rep < 200; ++rep) {
    const Field f = Field::standard(8 + static_cast<int>(rng() % 13));
    const auto r = check_all_criteria(oracle::random_subspace(rng, f, 1 + static_cast<int>(rng() % 5)));
    CHECK(r.consistent());
  }
}

TEST_CASE("shipped examples are zero-sum by all criteria") {
  for (int n : {17, 19}) {
    const auto ex = oracle::load_example(n);
    const auto& f = ex.u.field;
    CHECK(inverse_sum(canonicalize(ex.u.rows, f)).is_zero());
    CHECK(fk_eval(ex.u.rows, f).is_zero());
    CHECK(theta_eval(ex.v.rows, f).is_zero());
    const auto r = check_all_criteria(canonicalize(ex.u.rows, f));
    CHECK(r.zero_sum());
    CHECK(r.fk_zero());
    CHECK(r.theta_zero());
    CHECK(r.gamma_image == canonicalize(ex.v.rows, f));
  }
}

TEST_CASE("census identity on small sizes") {
  // zeros with nonzero Delta are ordered bases of zero-sum subspaces
  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {6, 2}, {5, 3}}) {
    const Field f = Field::standard(n);
    const u128 expect = zk_count(f, k) * gl2_order(k);
    const auto a = census(CensusPoly::Fk, f, k);
    const auto b = census(CensusPoly::Theta, f, k);
    CHECK(a.zeros_off_delta == expect);
    CHECK(b.zeros_off_delta == expect);
    CHECK(a.swept == u128{1} << (n * k));
  }
  const auto r = census(CensusPoly::Fk, Field::standard(4), 2);
  CHECK(r.zeros_off_delta == 30);
  REQUIRE(r.zeros_on_delta.has_value());
  CHECK(census_csv_row(r) == "4,2,fk,30,1,256");
  CHECK(census_csv_header() == "n,k,selector,zeros_off_delta,zeros_on_delta,swept");
}

TEST_CASE("census counts on Delta = 0 by brute force") {
  const Field f = Field::standard(4);
  for (int k = 2; k <= 3; ++k) {
    u128 theta_on = 0, fk_on = 0;
    const MPoly th = theta_sym(k), fk = fk_sym(k);
    const std::uint64_t total = std::uint64_t{1} << (4 * k);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::vector<Fe> p;
      for (int j = 0; j < k; ++j) p.push_back(Fe{(t >> (4 * j)) & 15});
      if (!delta_eval(p, f).is_zero()) continue;
      if (eval_sym(th, p, f).is_zero()) ++theta_on;
      if (eval_sym(fk, p, f).is_zero()) ++fk_on;
    }
    CHECK(census(CensusPoly::Theta, f, k).zeros_on_delta == theta_on);
    CHECK(census(CensusPoly::Fk, f, k).zeros_on_delta == fk_on);
  }
  SweepOptions slice;
  slice.shard_count = 32;
  CHECK_FALSE(census(CensusPoly::Fk, Field::standard(5), 5, slice).zeros_on_delta.has_value());
  CHECK_THROWS_AS(census(CensusPoly::Fk, Field::standard(3), 5), Error);
}

TEST_CASE("census shards add up") {
  const Field f = Field::standard(6);
  const auto whole = census(CensusPoly::Theta, f, 3);
  u128 off = 0, on = 0, swept = 0;
  for (int s = 0; s < 3; ++s) {
    SweepOptions o;
    o.shard_index = s;
    o.shard_count = 3;
    o.workers = 2;
    const auto part = census(CensusPoly::Theta, f, 3, o);
    off += part.zeros_off_delta;
    on += *part.zeros_on_delta;
    swept += part.swept;
  }
  CHECK(off == whole.zeros_off_delta);
  CHECK(on == *whole.zeros_on_delta);
  CHECK(swept == whole.swept);
}

TEST_CASE("witness search") {
  const Field f = Field::standard(7);
  SearchOptions rnd;
  rnd.seed = 5;
  const auto w = find_witness(f, 3, rnd);
  REQUIRE(w.has_value());
  CHECK(verify_witness(*w));
  CHECK(w->checks == WitnessChecks{true, true, true});
  CHECK(find_witness(f, 3, rnd) == w);  // deterministic in the seed
  SearchOptions ex;
  ex.strategy = SearchStrategy::Exhaustive;
  ex.workers = 3;
  const auto e1 = find_witness(f, 3, ex);
  ex.workers = 1;
  const auto e2 = find_witness(f, 3, ex);
  REQUIRE(e1.has_value());
  CHECK(e1 == e2);
  CHECK(verify_witness(*e1));
  // inversion is APN in odd degree: no zero-sum planes
  CHECK_FALSE(find_witness(f, 2, ex).has_value());
  CHECK(find_witness(Field::standard(8), 2, ex).has_value());
}

TEST_CASE("tampered witnesses fail verification") {
  const auto w = find_witness(Field::standard(7), 3, SearchOptions{});
  REQUIRE(w.has_value());
  auto bad = *w;
  bad.basis[0] ^= 1u << 6;
  CHECK_FALSE(verify_witness(bad));
  auto noncanon = *w;
  std::swap(noncanon.basis[0], noncanon.basis[1]);
  CHECK_FALSE(verify_witness(noncanon));
}

TEST_CASE("witness JSON round-trip and store") {
  const auto w = find_witness(Field::standard(9), 3, SearchOptions{});
  REQUIRE(w.has_value());
  const auto line = witness_to_json(*w);
  CHECK(line.find('\n') == std::string::npos);
  CHECK(witness_from_json(line) == *w);
  CHECK_THROWS_AS(witness_from_json("{\"n\":"), Error);
  const auto path = (std::filesystem::temp_directory_path() / "sumfree_store_test.jsonl").string();
  std::remove(path.c_str());
  append_witness(path, *w);
  append_witness(path, *w);
  const auto back = read_witness_store(path);
  CHECK(back.size() == 2);
  CHECK(back[1] == *w);
  std::remove(path.c_str());
}

TEST_CASE("sum-free tables for small n") {
  auto ks = [](const std::vector<SfEntry>& t) {
    std::vector<int> out;
    for (const auto& e : t)
      if (e.sum_free) out.push_back(e.k);
    return out;
  };
  CHECK(ks(sf_table(Field::standard(4))) == std::vector<int>{1, 3});
  CHECK(ks(sf_table(Field::standard(5))) == std::vector<int>{1, 2, 3, 4});
  const auto t7 = sf_table(Field::standard(7));
  CHECK(ks(t7) == std::vector<int>{1, 2, 5, 6});
  for (const auto& e : t7) {
    CHECK(e.method == (e.sum_free ? "exhaustion" : "witness"));
    if (!e.sum_free) {
      REQUIRE(e.witness.has_value());
      CHECK(verify_witness(*e.witness));
    }
  }
}

TEST_CASE("small worked cases") {
  const Field f4 = Field::standard(4);
  CHECK(inverse_sum(canonicalize(std::vector<Fe>{Fe{1}}, f4)) == Fe{1});
  // the F_4-lines u * F_4 of F_16 are exactly the zero-sum planes
  Fe w{};
  for (std::uint64_t x = 2; x < 16; ++x)
    if (f4.mul(Fe{x}, Fe{x}) + Fe{x} == Fe{1}) w = Fe{x};
  REQUIRE_FALSE(w.is_zero());
  std::set<std::vector<std::uint64_t>> lines;
  for (std::uint64_t u = 1; u < 16; ++u) {
    const Subspace e = canonicalize(std::vector<Fe>{Fe{u}, f4.mul(Fe{u}, w)}, f4);
    CHECK(is_zero_sum(e));
    lines.insert(std::vector<std::uint64_t>(e.basis().data().begin(), e.basis().data().end()));
  }
  CHECK(lines.size() == 5);
  CHECK(zk_count(f4, 1) == 0);
  for (int n : {5, 7, 9}) CHECK(zk_count(Field::standard(n), 2) == 0);
  SearchOptions o;
  o.seed = 7;
  const auto w17 = find_witness(Field::standard(17), 5, o);
  REQUIRE(w17.has_value());
  CHECK(verify_witness(*w17));
}

TEST_CASE("sum-free tables for n = 8 and 11") {
  auto ks = [](const std::vector<SfEntry>& t) {
    std::vector<int> out;
    for (const auto& e : t)
      if (e.sum_free) out.push_back(e.k);
    return out;
  };
  CHECK(ks(sf_table(Field::standard(8))) == std::vector<int>{1, 7});
  CHECK(ks(sf_table(Field::standard(11))) == std::vector<int>{1, 2, 9, 10});
}
