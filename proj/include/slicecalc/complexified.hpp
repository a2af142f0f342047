#pragma once

#include <string>

#include "slicecalc/cayley_dickson.hpp"
#include "slicecalc/gauss.hpp"

namespace slicecalc {

/// z = α + ιβ with Scalar parts; doubles as the complex scalar type of the library.
struct ComplexPoint {
  Scalar alpha;
  Scalar beta;

  ComplexPoint() = default;
  ComplexPoint(Scalar a, Scalar b) : alpha(std::move(a)), beta(std::move(b)) {}
  static ComplexPoint from_complex(Cplx z) { return {Scalar(z.real()), Scalar(z.imag())}; }
  static ComplexPoint from_gauss(const GaussQ& g) { return {Scalar(g.re), Scalar(g.im)}; }
  static ComplexPoint zero(Mode m) { return {Scalar::zero(m), Scalar::zero(m)}; }
  static ComplexPoint one(Mode m) { return {Scalar::one(m), Scalar::zero(m)}; }

  Mode mode() const { return alpha.mode(); }
  Cplx to_complex() const { return {alpha.to_double(), beta.to_double()}; }
  GaussQ to_gauss() const { return {alpha.rational(), beta.rational()}; }
  ComplexPoint to_mode(Mode m) const { return {alpha.to_mode(m), beta.to_mode(m)}; }
  bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }
  ComplexPoint conj() const { return {alpha, -beta}; }

  ComplexPoint operator-() const { return {-alpha, -beta}; }
  friend ComplexPoint operator+(const ComplexPoint& a, const ComplexPoint& b) {
    return {a.alpha + b.alpha, a.beta + b.beta};
  }
  friend ComplexPoint operator-(const ComplexPoint& a, const ComplexPoint& b) {
    return {a.alpha - b.alpha, a.beta - b.beta};
  }
  friend ComplexPoint operator*(const ComplexPoint& a, const ComplexPoint& b) {
    return {a.alpha * b.alpha - a.beta * b.beta, a.alpha * b.beta + a.beta * b.alpha};
  }
  friend ComplexPoint operator/(const ComplexPoint& a, const ComplexPoint& b);
  friend bool operator==(const ComplexPoint& a, const ComplexPoint& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
  }

  std::string to_string() const;
};

/// x + ιy in A⊗ℂ.
class ComplexifiedElement {
 public:
  ComplexifiedElement(AlgebraElement x, AlgebraElement y);
  explicit ComplexifiedElement(const AlgebraElement& x);

  static ComplexifiedElement zero(AlgebraKind k, Mode m);
  static ComplexifiedElement one(AlgebraKind k, Mode m);
  /// (α + ιβ)·1
  static ComplexifiedElement scalar(AlgebraKind k, const ComplexPoint& z);

  AlgebraKind kind() const { return x_.kind(); }
  Mode mode() const { return x_.mode(); }
  const AlgebraElement& x() const { return x_; }
  const AlgebraElement& y() const { return y_; }
  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }
  ComplexifiedElement to_mode(Mode m) const { return {x_.to_mode(m), y_.to_mode(m)}; }
  /// Euclidean norm of (x, y).
  double abs() const;
  /// Component along the real unit: x₀ + ιy₀.
  ComplexPoint center_part() const { return {x_.re(), y_.re()}; }

  ComplexifiedElement operator-() const { return {-x_, -y_}; }
  friend ComplexifiedElement operator+(const ComplexifiedElement& a, const ComplexifiedElement& b) {
    return {a.x_ + b.x_, a.y_ + b.y_};
  }
  friend ComplexifiedElement operator-(const ComplexifiedElement& a, const ComplexifiedElement& b) {
    return {a.x_ - b.x_, a.y_ - b.y_};
  }
  friend bool operator==(const ComplexifiedElement& a, const ComplexifiedElement& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

  std::string to_string() const;

 private:
  AlgebraElement x_;
  AlgebraElement y_;
};

ComplexifiedElement cx_mul(const ComplexifiedElement& a, const ComplexifiedElement& b);
ComplexifiedElement cx_bar(const ComplexifiedElement& w);
ComplexifiedElement cx_cinv(const ComplexifiedElement& w);
/// Central scalar times w: (α + ιβ)(x + ιy).
ComplexifiedElement cx_scale(const ComplexPoint& z, const ComplexifiedElement& w);
double cx_distance(const ComplexifiedElement& a, const ComplexifiedElement& b);

/// α + ιβ ↦ α + βI
AlgebraElement phi(const ImaginaryUnit& I, const ComplexPoint& z);
/// Inverse of phi on ℂ_I; NotOnSlice otherwise (Float tolerance 1e−10).
ComplexPoint phi_inv(const ImaginaryUnit& I, const AlgebraElement& x);
/// x + ιy ↦ x + yI
AlgebraElement phi_tilde(const ImaginaryUnit& I, const ComplexifiedElement& w);
/// x + ιy ↦ x + Iy, the placement used by slice evaluation.
AlgebraElement phi_tilde_left(const ImaginaryUnit& I, const ComplexifiedElement& w);

}  // namespace slicecalc
