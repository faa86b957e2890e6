#include "sumfree/subcalc.hpp"

#include <utility>

#include "sumfree/error.hpp"

namespace sumfree {

LinPoly::LinPoly(Field f, std::vector<Fe> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "2-polynomial needs at least one coefficient");
  if (coeffs_.back().is_zero()) throw Error(ErrorCode::InvalidArgument, "leading coefficient must be nonzero");
  if (order() > field_.n()) throw Error(ErrorCode::InvalidArgument, "2-polynomial order exceeds the field degree");
  for (Fe a : coeffs_)
    if (!field_.contains(a)) throw Error(ErrorCode::InvalidArgument, "coefficient " + to_hex(a) + " is not a field element");
}

LinPoly LinPoly::monic() const {
  if (is_monic()) return *this;
  const Fe s = field_.inv(coeffs_.back());
  std::vector<Fe> out;
  out.reserve(coeffs_.size());
  for (Fe a : coeffs_) out.push_back(field_.mul(a, s));
  return LinPoly(field_, std::move(out));
}

LinPoly LinPoly::twisted(int j) const {
  std::vector<Fe> out;
  out.reserve(coeffs_.size());
  for (Fe a : coeffs_) out.push_back(field_.frob_pow(a, j));
  return LinPoly(field_, std::move(out));
}

bool projectively_equal(const LinPoly& a, const LinPoly& b) {
  return a.field() == b.field() && a.order() == b.order() && a.monic() == b.monic();
}

std::vector<std::string> to_hex(const LinPoly& l) {
  std::vector<std::string> out;
  for (Fe a : l.coeffs()) out.push_back(to_hex(a));
  return out;
}

LinPoly annihilator(const Subspace& e) {
  const Field& f = e.field();
  std::vector<Fe> a{Fe{1}};
  for (Fe u : e.basis_elements()) {
    const Fe c = apply(LinPoly(f, a), u);
    std::vector<Fe> next(a.size() + 1);
    next[0] = f.mul(c, a[0]);
    for (std::size_t i = 1; i < a.size(); ++i) next[i] = f.square(a[i - 1]) + f.mul(c, a[i]);
    next[a.size()] = f.square(a.back());
    a = std::move(next);
  }
  return LinPoly(f, std::move(a));
}

Fe apply(const LinPoly& l, Fe x) {
  const Field& f = l.field();
  Fe acc{};
  Fe p = x;
  for (std::size_t i = 0; i < l.coeffs().size(); ++i) {
    if (i > 0) p = f.square(p);
    acc += f.mul(l.coeffs()[i], p);
  }
  return acc;
}

Subspace image(const LinPoly& l) {
  const Field& f = l.field();
  std::vector<Fe> imgs;
  imgs.reserve(static_cast<std::size_t>(f.n()));
  for (int j = 0; j < f.n(); ++j) imgs.push_back(apply(l, f.x_pow(j)));
  return canonicalize(imgs, f);
}

Subspace kernel(const LinPoly& l) {
  const Field& f = l.field();
  const int n = f.n();
  // Column j of the map matrix is L(X^j).
  BitMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const std::uint64_t img = apply(l, f.x_pow(j)).bits;
    for (int i = 0; i < n; ++i)
      if ((img >> i) & 1) m.set(i, j, true);
  }
  const BitMatrix ns = nullspace(m);
  return subspace_from_rref(f, ns.data());
}

Subspace trace_dual(const Subspace& e) {
  const Field& f = e.field();
  const int n = f.n();
  const std::vector<Fe> basis = e.basis_elements();
  BitMatrix m(static_cast<int>(basis.size()), n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < n; ++j)
      if (f.trace(f.mul(basis[i], f.x_pow(j)))) m.set(static_cast<int>(i), j, true);
  const BitMatrix ns = nullspace(m);
  return subspace_from_rref(f, ns.data());
}

Subspace gamma(const Subspace& e) { return trace_dual(image(annihilator(e))); }

Subspace gamma_inv(const Subspace& e) { return image(annihilator(trace_dual(e))); }

namespace {

using FieldMatrix = std::vector<Fe>;  // row-major k x k

FieldMatrix mat_mul(const FieldMatrix& a, const FieldMatrix& b, int k, const Field& f) {
  FieldMatrix out(static_cast<std::size_t>(k * k), Fe{});
  for (int i = 0; i < k; ++i)
    for (int t = 0; t < k; ++t) {
      const Fe x = a[static_cast<std::size_t>(i * k + t)];
      if (x.is_zero()) continue;
      for (int j = 0; j < k; ++j)
        out[static_cast<std::size_t>(i * k + j)] += f.mul(x, b[static_cast<std::size_t>(t * k + j)]);
    }
  return out;
}

}  // namespace

bool matrix_criterion(const LinPoly& l) {
  const Field& f = l.field();
  const int k = l.order();
  if (k == 0) return true;
  const Fe lead_inv = f.inv(l.coeff(k));
  FieldMatrix c(static_cast<std::size_t>(k * k), Fe{});
  for (int i = 0; i + 1 < k; ++i) c[static_cast<std::size_t>((i + 1) * k + i)] = Fe{1};
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i * k + k - 1)] = f.mul(l.coeff(i), lead_inv);
  FieldMatrix prod = c;
  FieldMatrix twist = c;
  for (int j = 1; j < f.n(); ++j) {
    for (Fe& x : twist) x = f.square(x);
    prod = mat_mul(prod, twist, k, f);
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (prod[static_cast<std::size_t>(i * k + j)] != Fe{i == j ? 1u : 0u}) return false;
  return true;
}

LinPoly gamma_coords(const LinPoly& l) {
  if (!matrix_criterion(l))
    throw Error(ErrorCode::DependentBasis, "kernel of the 2-polynomial is smaller than its order");
  const Field& f = l.field();
  const int k = l.order();
  std::vector<Fe> b(static_cast<std::size_t>(k + 1));
  for (int i = 0; i <= k; ++i) b[static_cast<std::size_t>(i)] = f.frob_pow(l.coeff(k - i), i);
  return LinPoly(f, std::move(b)).monic();
}

}  // namespace sumfree
