#pragma once

#include <optional>
#include <span>

#include "sumfree/gf2n.hpp"

namespace sumfree {

inline constexpr int kMaxEvalPoints = 64;
inline constexpr int kThetaEvalCap = 11;

/// Determinant over the field of a k x k row-major matrix; the buffer is
/// used as scratch.
Fe field_determinant(std::span<Fe> entries, int k, const Field& f);

/// Determinant of the matrix with entry (i, j) = points[j]^(2^row_log[i]).
Fe moore_like_det(std::span<const Fe> points, std::span<const int> row_log_exponents, const Field& f);

/// Moore determinant: row exponents 2^0 .. 2^(k-1). Nonzero exactly when the
/// points are F_2-linearly independent.
Fe delta_eval(std::span<const Fe> points, const Field& f);
/// Row exponents 2^0, 2^2, 2^3, ..., 2^k.
Fe delta1_eval(std::span<const Fe> points, const Field& f);

/// delta1 / delta; throws DependentBasis when the points are dependent.
Fe fk_eval(std::span<const Fe> points, const Field& f);
/// As fk_eval but returns nullopt on dependent points.
std::optional<Fe> fk_try(std::span<const Fe> points, const Field& f);

/// Theta_k at a point, by a subset-sum recursion over the variables: the
/// monomials of Theta_k are exactly the exponent vectors with entries in
/// {0, 1, 2, 4, ...} summing to 2^(k-1). k <= 11.
Fe theta_eval(std::span<const Fe> points, const Field& f);
/// Theta_k by summing m_lambda over lambda_set(k), each m_lambda expanded by
/// multiset permutation. Independent of theta_eval; k <= 11.
Fe theta_eval_by_partitions(std::span<const Fe> points, const Field& f);

/// Product over nonzero a in F_2^k of (a_1 u_1 + ... + a_k u_k); equals the
/// Moore determinant. k <= 20.
Fe moore_product_formula(std::span<const Fe> points, const Field& f);

}  // namespace sumfree
