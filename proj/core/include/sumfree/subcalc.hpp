#pragma once

#include <string>
#include <vector>

#include "sumfree/bitlinalg.hpp"
#include "sumfree/gf2n.hpp"

namespace sumfree {

/// 2-polynomial L(x) = sum a_i x^(2^i), i = 0..k, over F_{2^n}.
class LinPoly {
 public:
  /// Throws InvalidArgument unless the list is nonempty, a_k != 0, k <= n and
  /// every coefficient lies in the field.
  LinPoly(Field f, std::vector<Fe> coeffs);

  const Field& field() const noexcept { return field_; }
  /// k, the log2 of the degree.
  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Fe>& coeffs() const noexcept { return coeffs_; }
  Fe coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_monic() const noexcept { return coeffs_.back() == Fe{1}; }

  LinPoly monic() const;
  /// Coefficients raised to 2^j; the kernel becomes its Frobenius image.
  LinPoly twisted(int j) const;

  friend bool operator==(const LinPoly& a, const LinPoly& b) noexcept {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<Fe> coeffs_;
};

/// Equal up to a nonzero scalar factor.
bool projectively_equal(const LinPoly& a, const LinPoly& b);

/// Coefficient words as lowercase hex, index = log2 of the exponent.
std::vector<std::string> to_hex(const LinPoly& l);

/// The monic 2-polynomial of degree 2^dim E vanishing exactly on E.
LinPoly annihilator(const Subspace& e);

Fe apply(const LinPoly& l, Fe x);
/// L(F_{2^n}), from the images of the polynomial basis.
Subspace image(const LinPoly& l);
/// {x in F_{2^n} : L(x) = 0}.
Subspace kernel(const LinPoly& l);

/// {x : Tr(xy) = 0 for all y in E}.
Subspace trace_dual(const Subspace& e);

/// trace_dual(image(annihilator(E))); preserves dimension.
Subspace gamma(const Subspace& e);
/// image(annihilator(trace_dual(E))); inverse of gamma.
Subspace gamma_inv(const Subspace& e);

/// Builds the k x k matrix C with ones on the subdiagonal and last column
/// a_i / a_k, and tests C C^(2) C^(4) ... C^(2^(n-1)) = I. True exactly when
/// the kernel of L in F_{2^n} has dimension k.
bool matrix_criterion(const LinPoly& l);

/// Monic form of (a_k, a_(k-1)^2, ..., a_0^(2^k)); its kernel is
/// gamma(ker L). Throws DependentBasis when matrix_criterion(l) fails.
LinPoly gamma_coords(const LinPoly& l);

}  // namespace sumfree
