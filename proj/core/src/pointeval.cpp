#include "sumfree/pointeval.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "sumfree/error.hpp"
#include "sumfree/sympoly.hpp"

namespace sumfree {

namespace {

void check_points(std::span<const Fe> points, const Field& f) {
  if (points.empty() || static_cast<int>(points.size()) > kMaxEvalPoints)
    throw Error(ErrorCode::ArityMismatch, "need between 1 and 64 points");
  for (Fe p : points)
    if (!f.contains(p)) throw Error(ErrorCode::InvalidArgument, "point " + to_hex(p) + " is not a field element");
}

}  // namespace

Fe field_determinant(std::span<Fe> m, int k, const Field& f) {
  auto at = [&](int i, int j) -> Fe& { return m[static_cast<std::size_t>(i * k + j)]; };
  switch (k) {
    case 1:
      return at(0, 0);
    case 2:
      return f.mul(at(0, 0), at(1, 1)) + f.mul(at(0, 1), at(1, 0));
    case 3:
      return f.mul(at(0, 0), f.mul(at(1, 1), at(2, 2)) + f.mul(at(1, 2), at(2, 1))) +
             f.mul(at(0, 1), f.mul(at(1, 0), at(2, 2)) + f.mul(at(1, 2), at(2, 0))) +
             f.mul(at(0, 2), f.mul(at(1, 0), at(2, 1)) + f.mul(at(1, 1), at(2, 0)));
    default:
      break;
  }
  Fe det{1};
  for (int c = 0; c < k; ++c) {
    int piv = c;
    while (piv < k && at(piv, c).is_zero()) ++piv;
    if (piv == k) return Fe{};
    if (piv != c)
      for (int j = c; j < k; ++j) std::swap(at(piv, j), at(c, j));
    const Fe p = at(c, c);
    det = f.mul(det, p);
    const Fe p_inv = f.inv(p);
    for (int r = c + 1; r < k; ++r) {
      const Fe lead = at(r, c);
      if (lead.is_zero()) continue;
      const Fe factor = f.mul(lead, p_inv);
      for (int j = c; j < k; ++j) at(r, j) += f.mul(factor, at(c, j));
    }
  }
  return det;
}

Fe moore_like_det(std::span<const Fe> points, std::span<const int> row_log, const Field& f) {
  check_points(points, f);
  const int k = static_cast<int>(points.size());
  if (static_cast<int>(row_log.size()) != k) throw Error(ErrorCode::ArityMismatch, "need one row exponent per point");
  const int top = *std::max_element(row_log.begin(), row_log.end());
  constexpr int kSmall = 8;
  std::array<Fe, kSmall * kSmall> small;
  std::vector<Fe> large;
  std::span<Fe> mat;
  if (k <= kSmall) {
    mat = std::span<Fe>(small.data(), static_cast<std::size_t>(k * k));
  } else {
    large.resize(static_cast<std::size_t>(k * k));
    mat = large;
  }
  std::array<Fe, kMaxEvalPoints + 2> conj;
  for (int j = 0; j < k; ++j) {
    conj[0] = points[static_cast<std::size_t>(j)];
    for (int e = 1; e <= top; ++e) conj[static_cast<std::size_t>(e)] = f.square(conj[static_cast<std::size_t>(e - 1)]);
    for (int i = 0; i < k; ++i) mat[static_cast<std::size_t>(i * k + j)] = conj[static_cast<std::size_t>(row_log[static_cast<std::size_t>(i)])];
  }
  return field_determinant(mat, k, f);
}

namespace {

std::span<const int> delta_rows(int k) {
  static const auto rows = [] {
    std::array<int, kMaxEvalPoints> r{};
    for (int i = 0; i < kMaxEvalPoints; ++i) r[static_cast<std::size_t>(i)] = i;
    return r;
  }();
  return std::span<const int>(rows.data(), static_cast<std::size_t>(k));
}

std::span<const int> delta1_rows(int k) {
  static const auto rows = [] {
    std::array<int, kMaxEvalPoints> r{};
    for (int i = 1; i < kMaxEvalPoints; ++i) r[static_cast<std::size_t>(i)] = i + 1;
    return r;
  }();
  return std::span<const int>(rows.data(), static_cast<std::size_t>(k));
}

}  // namespace

Fe delta_eval(std::span<const Fe> points, const Field& f) {
  return moore_like_det(points, delta_rows(static_cast<int>(points.size())), f);
}

Fe delta1_eval(std::span<const Fe> points, const Field& f) {
  return moore_like_det(points, delta1_rows(static_cast<int>(points.size())), f);
}

std::optional<Fe> fk_try(std::span<const Fe> points, const Field& f) {
  const Fe d = delta_eval(points, f);
  if (d.is_zero()) return std::nullopt;
  return f.div(delta1_eval(points, f), d);
}

Fe fk_eval(std::span<const Fe> points, const Field& f) {
  if (auto v = fk_try(points, f)) return *v;
  throw Error(ErrorCode::DependentBasis, "F_k is undefined as a quotient on linearly dependent points");
}

Fe theta_eval(std::span<const Fe> points, const Field& f) {
  check_points(points, f);
  const int k = static_cast<int>(points.size());
  if (k > kThetaEvalCap) throw Error(ErrorCode::LimitExceeded, "theta evaluation is capped at k = 11");
  const int total = 1 << (k - 1);
  // sums[s] = sum over assignments to the variables seen so far with
  // exponent total s of the corresponding monomial values.
  std::array<Fe, (1 << (kThetaEvalCap - 1)) + 1> sums;
  std::fill_n(sums.begin(), total + 1, Fe{});
  sums[0] = Fe{1};
  std::array<Fe, kThetaEvalCap> pw;
  for (Fe x : points) {
    if (x.is_zero()) continue;
    pw[0] = x;
    for (int i = 1; i < k; ++i) pw[static_cast<std::size_t>(i)] = f.square(pw[static_cast<std::size_t>(i - 1)]);
    for (int s = total; s >= 1; --s) {
      Fe acc = sums[static_cast<std::size_t>(s)];
      for (int i = 0; (1 << i) <= s; ++i) {
        const Fe prev = sums[static_cast<std::size_t>(s - (1 << i))];
        if (!prev.is_zero()) acc += f.mul(prev, pw[static_cast<std::size_t>(i)]);
      }
      sums[static_cast<std::size_t>(s)] = acc;
    }
  }
  return sums[static_cast<std::size_t>(total)];
}

Fe theta_eval_by_partitions(std::span<const Fe> points, const Field& f) {
  check_points(points, f);
  const int k = static_cast<int>(points.size());
  if (k > kThetaEvalCap) throw Error(ErrorCode::LimitExceeded, "theta evaluation is capped at k = 11");
  // conj[j][i] = points[j]^(2^i)
  std::vector<std::array<Fe, kThetaEvalCap>> conj(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    conj[static_cast<std::size_t>(j)][0] = points[static_cast<std::size_t>(j)];
    for (int i = 1; i < k; ++i) conj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = f.square(conj[static_cast<std::size_t>(j)][static_cast<std::size_t>(i - 1)]);
  }
  Fe sum{};
  for (const Partition2Adic& lambda : lambda_set(k)) {
    // log2 of each part, -1 for the zero padding.
    std::vector<int> logs(static_cast<std::size_t>(k), -1);
    for (std::size_t p = 0; p < lambda.parts.size(); ++p) logs[p] = std::countr_zero(lambda.parts[p]);
    std::sort(logs.begin(), logs.end());
    do {
      Fe term{1};
      for (int j = 0; j < k && !term.is_zero(); ++j) {
        const int e = logs[static_cast<std::size_t>(j)];
        if (e >= 0) term = f.mul(term, conj[static_cast<std::size_t>(j)][static_cast<std::size_t>(e)]);
      }
      sum += term;
    } while (std::next_permutation(logs.begin(), logs.end()));
  }
  return sum;
}

Fe moore_product_formula(std::span<const Fe> points, const Field& f) {
  check_points(points, f);
  const int k = static_cast<int>(points.size());
  if (k > 20) throw Error(ErrorCode::LimitExceeded, "product formula is capped at k = 20");
  Fe prod{1};
  Fe comb{};
  const std::uint32_t count = std::uint32_t{1} << k;
  for (std::uint32_t i = 1; i < count; ++i) {
    comb += points[static_cast<std::size_t>(std::countr_zero(i))];
    prod = f.mul(prod, comb);
  }
  return prod;
}

}  // namespace sumfree
