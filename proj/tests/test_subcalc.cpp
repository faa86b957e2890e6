#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "sumfree/error.hpp"
#include "sumfree/pointeval.hpp"
#include "sumfree/subcalc.hpp"

using namespace sumfree;

namespace {

int random_n(std::mt19937_64& rng) { return 8 + static_cast<int>(rng() % 17); }

}  // namespace

TEST_CASE("LinPoly validation") {
  const Field f = Field::standard(8);
  CHECK_THROWS_AS(LinPoly(f, {}), Error);
  CHECK_THROWS_AS(LinPoly(f, {Fe{1}, Fe{}}), Error);
  CHECK_THROWS_AS(LinPoly(f, {Fe{0x100}}), Error);
  CHECK_THROWS_AS(LinPoly(f, std::vector<Fe>(10, Fe{1})), Error);
  const LinPoly l(f, {Fe{3}, Fe{7}});
  CHECK(l.order() == 1);
  CHECK_FALSE(l.is_monic());
  CHECK(l.monic().is_monic());
  CHECK(projectively_equal(l, l.monic()));
  CHECK_FALSE(projectively_equal(l, LinPoly(f, {Fe{1}, Fe{1}})));
  CHECK(to_hex(l) == std::vector<std::string>{"3", "7"});
}

TEST_CASE("annihilator equals the product over the subspace") {
  std::mt19937_64 rng(20);
  for (int rep = 0; rep < 60; ++rep) {
    const Field f = Field::standard(random_n(rng));
    const int k = 1 + static_cast<int>(rng() % 5);
    const Subspace e = oracle::random_subspace(rng, f, k);
    const LinPoly l = annihilator(e);
    CHECK(l.order() == k);
    CHECK(l.is_monic());
    const auto prod = oracle::product_poly(e);
    REQUIRE(prod.size() == (std::size_t{1} << k) + 1);
    for (std::size_t d = 0; d < prod.size(); ++d) {
      if (std::has_single_bit(d)) CHECK(prod[d] == l.coeff(std::countr_zero(d)));
      else CHECK(prod[d].is_zero());
    }
    for (Fe u : elements(e)) CHECK(apply(l, u).is_zero());
    CHECK(kernel(l) == e);
  }
  CHECK(annihilator(Subspace(Field::standard(5))).coeffs() == std::vector<Fe>{Fe{1}});
}

TEST_CASE("annihilator by the determinant quotient formula") {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 40; ++rep) {
    const Field f = Field::standard(random_n(rng));
    const int k = 1 + static_cast<int>(rng() % 5);
    const Subspace e = oracle::random_subspace(rng, f, k);
    auto pts = e.basis_elements();
    const Fe d = delta_eval(pts, f);
    const LinPoly l = annihilator(e);
    for (int t = 0; t < 10; ++t) {
      const Fe x = oracle::random_element(rng, f);
      auto ext = pts;
      ext.push_back(x);
      CHECK(f.mul(apply(l, x), d) == delta_eval(ext, f));
    }
  }
}

TEST_CASE("kernel, image and rank-nullity") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 100; ++rep) {
    const Field f = Field::standard(8 + static_cast<int>(rng() % 9));
    const int k = static_cast<int>(rng() % 5);
    std::vector<Fe> c(static_cast<std::size_t>(k + 1));
    for (Fe& x : c) x = oracle::random_element(rng, f);
    c.back() = oracle::random_nonzero(rng, f);
    const LinPoly l(f, c);
    const Subspace ker = kernel(l);
    CHECK(ker.dim() == oracle::kernel_dim_brute(l));
    CHECK(ker.dim() + image(l).dim() == f.n());
    CHECK(matrix_criterion(l) == (ker.dim() == k));
    for (Fe u : ker.basis_elements()) CHECK(apply(l, u).is_zero());
  }
}

TEST_CASE("subspace calculus identities on random instances") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    const Field f = Field::standard(random_n(rng));
    const int k = 1 + static_cast<int>(rng() % 6);
    const Subspace e = oracle::random_subspace(rng, f, k);
    const Subspace ep = image(annihilator(e));
    CHECK(ep.dim() == f.n() - k);
    CHECK(image(annihilator(ep)) == e);  // E'' = E
    const Subspace perp = trace_dual(e);
    CHECK(perp.dim() == f.n() - k);
    CHECK(trace_dual(perp) == e);
    for (Fe a : e.basis_elements())
      for (Fe b : perp.basis_elements()) CHECK_FALSE(f.trace(f.mul(a, b)));
    const Subspace g = gamma(e);
    CHECK(g.dim() == k);
    CHECK(gamma_inv(g) == e);
    CHECK(gamma(gamma_inv(e)) == e);
    const LinPoly l = annihilator(e);
    CHECK(matrix_criterion(l));
    CHECK(kernel(gamma_coords(l)) == g);
  }
}

TEST_CASE("gamma coordinates applied twice") {
  // With a = coeffs(L) and lambda = a_0^(2^k), the double image has
  // coefficients a_i^(2^k) / lambda^(2^i): the k-fold twist of L composed
  // with x -> x / lambda.
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 50; ++rep) {
    const Field f = Field::standard(random_n(rng));
    const int k = 1 + static_cast<int>(rng() % 5);
    const Subspace e = oracle::random_subspace(rng, f, k);
    const LinPoly l = annihilator(e);
    const LinPoly twice = gamma_coords(gamma_coords(l));
    const Fe lambda = f.frob_pow(l.coeff(0), k);
    std::vector<Fe> c;
    for (int i = 0; i <= k; ++i) c.push_back(f.div(f.frob_pow(l.coeff(i), k), f.frob_pow(lambda, i)));
    CHECK(projectively_equal(twice, LinPoly(f, c)));
    CHECK(kernel(twice) == gamma(gamma(e)));
    std::vector<Fe> moved;
    for (Fe u : e.basis_elements()) moved.push_back(f.mul(lambda, f.frob_pow(u, k)));
    CHECK(kernel(twice) == canonicalize(moved, f));
    CHECK(kernel(l.twisted(1)).dim() == k);
  }
}

TEST_CASE("matrix criterion on polynomials without full kernel") {
  const Field f = Field::standard(5);
  // X^2 + X has kernel F_2, but X^4 + X has kernel F_4, which is not in F_32.
  CHECK(matrix_criterion(LinPoly(f, {Fe{1}, Fe{1}})));
  CHECK_FALSE(matrix_criterion(LinPoly(f, {Fe{1}, Fe{}, Fe{1}})));
  CHECK_THROWS_AS(gamma_coords(LinPoly(f, {Fe{1}, Fe{}, Fe{1}})), Error);
  CHECK(kernel(LinPoly(f, {Fe{1}, Fe{}, Fe{1}})).dim() == 1);
  CHECK(matrix_criterion(LinPoly(f, {Fe{7}})));
  // X^32 + X vanishes on all of F_32.
  std::vector<Fe> full(6, Fe{});
  full[0] = full[5] = Fe{1};
  CHECK(matrix_criterion(LinPoly(f, full)));
  CHECK(kernel(LinPoly(f, full)).dim() == 5);
}

TEST_CASE("shipped examples: gamma maps u onto v") {
  for (int n : {17, 19}) {
    const auto ex = oracle::load_example(n);
    const Field& f = ex.u.field;
    const Subspace e = canonicalize(ex.u.rows, f);
    const Subspace v = canonicalize(ex.v.rows, f);
    REQUIRE(e.dim() == 5);
    CHECK(gamma(e) == v);
    CHECK(gamma_inv(v) == e);
    CHECK(kernel(gamma_coords(annihilator(e))) == v);
  }
}

TEST_CASE("annihilator edge cases") {
  const Field f = Field::standard(6);
  std::vector<Fe> basis;
  for (int j = 0; j < 6; ++j) basis.push_back(f.x_pow(j));
  std::vector<Fe> full(7, Fe{});
  full[0] = full[6] = Fe{1};
  const LinPoly whole = annihilator(canonicalize(basis, f));
  CHECK(whole.coeffs() == full);
  CHECK(projectively_equal(gamma_coords(whole), whole));
  CHECK(annihilator(canonicalize(std::vector<Fe>{Fe{1}}, f)).coeffs() == std::vector<Fe>{Fe{1}, Fe{1}});
  CHECK(trace_dual(Subspace(f)).dim() == 6);
  std::mt19937_64 rng(25);
  const LinPoly l = annihilator(oracle::random_subspace(rng, f, 3));
  for (int i = 0; i < 20; ++i) {
    const Fe x = oracle::random_element(rng, f), y = oracle::random_element(rng, f);
    CHECK(apply(l, x + y) == apply(l, x) + apply(l, y));
    // x^2 + a x has a one-dimensional kernel for every nonzero a
    const LinPoly q(f, {oracle::random_nonzero(rng, f), Fe{1}});
    CHECK(matrix_criterion(q));
    CHECK(kernel(q).dim() == 1);
  }
}
