#pragma once

#include <vector>

#include "sumfree/gf2n.hpp"

namespace sumfree {

/// Multiplicative order of 2 modulo odd n >= 1.
int order_of_two(int n);

/// Cyclotomic cosets {s, 2s, 4s, ...} mod n, sorted by least representative.
std::vector<std::vector<int>> cyclotomic_cosets(int n);

struct CyclotomicFactor {
  u128 poly = 0;  // bit j = coefficient of X^j
  std::vector<int> coset;

  int degree() const noexcept { return poly_degree(poly); }
};

/// Irreducible factors of X^n - 1 over F_2 for odd n <= 127: one minimal
/// polynomial per cyclotomic coset, computed as the product of (X - b^j)
/// over the coset in the splitting field F_{2^m}, m = order_of_two(n).
/// Throws SplittingFieldTooLarge when m > 64.
std::vector<CyclotomicFactor> factor_x_n_minus_1(int n);

}  // namespace sumfree
