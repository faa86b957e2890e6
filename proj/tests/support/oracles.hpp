#pragma once

// Slow, independent reference computations used to cross-check the library.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sumfree/basis_io.hpp"
#include "sumfree/bitlinalg.hpp"
#include "sumfree/gf2n.hpp"
#include "sumfree/subcalc.hpp"

namespace oracle {

using sumfree::Fe;
using sumfree::Field;
using sumfree::u128;

inline std::string data_path(const std::string& name) { return std::string(SUMFREE_TEST_DATA_DIR) + "/" + name; }

/// Schoolbook product followed by bit-by-bit long division.
inline Fe mul(Fe a, Fe b, const Field& f) {
  u128 prod = 0;
  for (int i = 0; i < 64; ++i)
    if ((a.bits >> i) & 1) prod ^= static_cast<u128>(b.bits) << i;
  const u128 m = f.modulus();
  for (int d = 127; d >= f.n(); --d)
    if ((prod >> d) & 1) prod ^= m << (d - f.n());
  return Fe{static_cast<std::uint64_t>(prod)};
}

inline Fe inv(Fe a, const Field& f) {
  // a^(2^n - 2) by repeated squaring with the schoolbook multiply.
  Fe r{1}, sq = a;
  for (int i = 1; i < f.n(); ++i) {
    sq = mul(sq, sq, f);
    r = mul(r, sq, f);
  }
  return r;
}

/// Product formula (2^n-1)...(2^(n-k+1)-1) / (2^k-1)...(2-1), exact for
/// small n.
inline u128 gaussian_product(int n, int k) {
  u128 num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (u128{1} << (n - i)) - 1;
    den *= (u128{1} << (k - i)) - 1;
  }
  return num / den;
}

/// Sorted element lists of every k-dimensional subspace of F_2^n, built from
/// all k-tuples of vectors (n * k <= 20).
inline std::set<std::vector<std::uint64_t>> all_subspaces(int n, int k) {
  std::set<std::vector<std::uint64_t>> out;
  const std::uint64_t side = std::uint64_t{1} << n;
  std::vector<std::uint64_t> pick(static_cast<std::size_t>(k), 0);
  const std::uint64_t total = std::uint64_t{1} << (n * k);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t r = t;
    for (int j = 0; j < k; ++j) {
      pick[static_cast<std::size_t>(j)] = r % side;
      r /= side;
    }
    std::set<std::uint64_t> span{0};
    for (std::uint64_t v : pick) {
      std::set<std::uint64_t> next = span;
      for (std::uint64_t s : span) next.insert(s ^ v);
      span = std::move(next);
    }
    if (span.size() == (std::size_t{1} << k)) out.insert(std::vector<std::uint64_t>(span.begin(), span.end()));
  }
  return out;
}

/// Zero-sum count by summing inverses over explicit element sets.
inline int zk_brute(const Field& f, int k) {
  int count = 0;
  for (const auto& s : all_subspaces(f.n(), k)) {
    Fe acc{};
    for (std::uint64_t x : s)
      if (x) acc += inv(Fe{x}, f);
    if (acc.is_zero()) ++count;
  }
  return count;
}

/// Kernel dimension of L by a full sweep (n <= 20).
inline int kernel_dim_brute(const sumfree::LinPoly& l) {
  const Field& f = l.field();
  std::uint64_t zeros = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.n()); ++x)
    if (sumfree::apply(l, Fe{x}).is_zero()) ++zeros;
  return std::countr_zero(zeros);
}

/// Coefficients of prod over u in E of (X - u), in F_{2^n}[X] (dim E <= 6).
inline std::vector<Fe> product_poly(const sumfree::Subspace& e) {
  const Field& f = e.field();
  std::vector<Fe> poly{Fe{1}};
  for (Fe u : sumfree::elements(e)) {
    std::vector<Fe> next(poly.size() + 1, Fe{});
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] += f.mul(poly[i], u);
    }
    poly = std::move(next);
  }
  return poly;
}

inline Fe random_element(std::mt19937_64& rng, const Field& f) { return f.element(rng()); }

inline Fe random_nonzero(std::mt19937_64& rng, const Field& f) {
  for (;;)
    if (Fe a = f.element(rng()); !a.is_zero()) return a;
}

/// A uniformly random k-dimensional subspace.
inline sumfree::Subspace random_subspace(std::mt19937_64& rng, const Field& f, int k) {
  std::vector<Fe> v(static_cast<std::size_t>(k));
  for (;;) {
    for (Fe& x : v) x = f.element(rng());
    auto s = sumfree::canonicalize(v, f);
    if (s.dim() == k) return s;
  }
}

/// Random invertible k x k matrix over F_2 applied to a basis.
inline std::vector<Fe> random_change_of_basis(std::mt19937_64& rng, const std::vector<Fe>& basis) {
  const int k = static_cast<int>(basis.size());
  for (;;) {
    std::vector<std::uint64_t> m(static_cast<std::size_t>(k));
    for (auto& w : m) w = rng() & ((std::uint64_t{1} << k) - 1);
    auto r = sumfree::rref(sumfree::BitMatrix::from_rows(m, k));
    if (r.rank != k) continue;
    std::vector<Fe> out;
    for (std::uint64_t w : m) {
      Fe acc{};
      for (int j = 0; j < k; ++j)
        if ((w >> j) & 1) acc += basis[static_cast<std::size_t>(j)];
      out.push_back(acc);
    }
    return out;
  }
}

struct ShippedExample {
  sumfree::BasisFile u;
  sumfree::BasisFile v;
};

inline ShippedExample load_example(int n) {
  return {sumfree::read_basis_file(data_path("n" + std::to_string(n) + "_u.txt")),
          sumfree::read_basis_file(data_path("n" + std::to_string(n) + "_v.txt"))};
}

}  // namespace oracle
