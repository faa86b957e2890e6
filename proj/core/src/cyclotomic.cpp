#include "sumfree/cyclotomic.hpp"

#include <random>
#include <string>

#include "sumfree/error.hpp"

namespace sumfree {

namespace {

void check_odd(int n) {
  if (n < 1 || n % 2 == 0 || n > 127)
    throw Error(ErrorCode::InvalidArgument, "X^n - 1 factorization needs odd 1 <= n <= 127");
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

/// An element of exact multiplicative order n in f, where n | 2^m - 1.
Fe element_of_order(int n, const Field& f) {
  const u128 group = (u128{1} << f.n()) - 1;
  const u128 cofactor = group / static_cast<u128>(n);
  const std::vector<int> primes = prime_factors(n);
  std::mt19937_64 rng(n);
  for (;;) {
    const Fe a = f.element(rng());
    if (a.is_zero()) continue;
    const Fe b = f.pow(a, cofactor);
    bool exact = true;
    for (int p : primes)
      if (f.pow(b, static_cast<std::uint64_t>(n / p)) == Fe{1}) exact = false;
    if (exact) return b;
  }
}

}  // namespace

int order_of_two(int n) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "order of 2 needs odd n >= 1");
  if (n == 1) return 1;
  int m = 1;
  for (long long r = 2 % n; r != 1; r = (r * 2) % n) ++m;
  return m;
}

std::vector<std::vector<int>> cyclotomic_cosets(int n) {
  if (n < 1 || n % 2 == 0) throw Error(ErrorCode::InvalidArgument, "cyclotomic cosets need odd n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    std::vector<int> c;
    for (int j = s; !seen[static_cast<std::size_t>(j)]; j = (2 * j) % n) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CyclotomicFactor> factor_x_n_minus_1(int n) {
  check_odd(n);
  const int m = order_of_two(n);
  if (m > Field::kMaxDegree)
    throw Error(ErrorCode::SplittingFieldTooLarge,
                "splitting field of X^" + std::to_string(n) + " - 1 has degree " + std::to_string(m) + " > 64");
  const Field f = Field::standard(m);
  const Fe beta = n == 1 ? Fe{1} : element_of_order(n, f);
  std::vector<CyclotomicFactor> out;
  for (auto& coset : cyclotomic_cosets(n)) {
    // Coefficients low to high, starting from the constant polynomial 1.
    std::vector<Fe> poly{Fe{1}};
    for (int j : coset) {
      const Fe root = f.pow(beta, static_cast<std::uint64_t>(j));
      std::vector<Fe> next(poly.size() + 1, Fe{});
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] += poly[i];
        next[i] += f.mul(poly[i], root);
      }
      poly = std::move(next);
    }
    CyclotomicFactor fac;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i].bits > 1)
        throw Error(ErrorCode::InvalidArgument, "minimal polynomial has a coefficient outside F_2");
      if (poly[i].bits == 1) fac.poly |= u128{1} << i;
    }
    fac.coset = std::move(coset);
    out.push_back(std::move(fac));
  }
  return out;
}

}  // namespace sumfree
