#include "slicecalc/complexified.hpp"

#include <cmath>

#include "slicecalc/error.hpp"

namespace slicecalc {

ComplexPoint operator/(const ComplexPoint& a, const ComplexPoint& b) {
  Scalar n = b.alpha * b.alpha + b.beta * b.beta;
  if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "complex division by zero");
  return {(a.alpha * b.alpha + a.beta * b.beta) / n, (a.beta * b.alpha - a.alpha * b.beta) / n};
}

std::string ComplexPoint::to_string() const {
  if (beta.is_zero()) return alpha.to_string();
  std::string b = beta.to_string();
  return alpha.to_string() + (b[0] == '-' ? "" : "+") + b + "*iota";
}

ComplexifiedElement::ComplexifiedElement(AlgebraElement x, AlgebraElement y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.kind() != y_.kind()) throw Error(ErrorCode::KindMismatch, "complexified parts of different kinds");
  if (x_.mode() != y_.mode()) throw Error(ErrorCode::ModeMismatch, "complexified parts of different modes");
}

ComplexifiedElement::ComplexifiedElement(const AlgebraElement& x)
    : x_(x), y_(AlgebraElement::zero(x.kind(), x.mode())) {}

ComplexifiedElement ComplexifiedElement::zero(AlgebraKind k, Mode m) {
  return {AlgebraElement::zero(k, m), AlgebraElement::zero(k, m)};
}

ComplexifiedElement ComplexifiedElement::one(AlgebraKind k, Mode m) {
  return {AlgebraElement::one(k, m), AlgebraElement::zero(k, m)};
}

ComplexifiedElement ComplexifiedElement::scalar(AlgebraKind k, const ComplexPoint& z) {
  return {AlgebraElement::real(k, z.alpha), AlgebraElement::real(k, z.beta)};
}

double ComplexifiedElement::abs() const {
  double a = x_.abs(), b = y_.abs();
  return std::sqrt(a * a + b * b);
}

std::string ComplexifiedElement::to_string() const {
  return "(" + x_.to_string() + ") + iota*(" + y_.to_string() + ")";
}

ComplexifiedElement cx_mul(const ComplexifiedElement& a, const ComplexifiedElement& b) {
  const auto &x = a.x(), &y = a.y(), &u = b.x(), &v = b.y();
  return {x * u - y * v, x * v + y * u};
}

ComplexifiedElement cx_bar(const ComplexifiedElement& w) { return {w.x(), -w.y()}; }

ComplexifiedElement cx_cinv(const ComplexifiedElement& w) { return {cd_conj(w.x()), cd_conj(w.y())}; }

ComplexifiedElement cx_scale(const ComplexPoint& z, const ComplexifiedElement& w) {
  return {w.x().scaled(z.alpha) - w.y().scaled(z.beta), w.y().scaled(z.alpha) + w.x().scaled(z.beta)};
}

double cx_distance(const ComplexifiedElement& a, const ComplexifiedElement& b) {
  double s = 0;
  for (int k = 0; k < a.x().dim(); ++k) {
    double dx = a.x()[k].to_double() - b.x()[k].to_double();
    double dy = a.y()[k].to_double() - b.y()[k].to_double();
    s += dx * dx + dy * dy;
  }
  return std::sqrt(s);
}

AlgebraElement phi(const ImaginaryUnit& I, const ComplexPoint& z) {
  Mode m = z.mode();
  return AlgebraElement::real(I.kind(), z.alpha) + I.element().to_mode(m).scaled(z.beta);
}

ComplexPoint phi_inv(const ImaginaryUnit& I, const AlgebraElement& x) {
  Mode m = x.mode();
  AlgebraElement u = I.element().to_mode(m);
  // β = ⟨Im x, I⟩ since n(I) = 1.
  Scalar beta = Scalar::zero(m);
  for (int k = 1; k < x.dim(); ++k) beta += x[k] * u[k];
  AlgebraElement residual = x.im() - u.scaled(beta);
  bool on_slice = m == Mode::Exact ? residual.is_zero() : residual.abs() <= 1e-10 * (1 + x.abs());
  if (!on_slice) throw Error(ErrorCode::NotOnSlice, "element does not lie on the slice of the given unit");
  return {x.re(), beta};
}

AlgebraElement phi_tilde(const ImaginaryUnit& I, const ComplexifiedElement& w) {
  return w.x() + w.y() * I.element().to_mode(w.mode());
}

AlgebraElement phi_tilde_left(const ImaginaryUnit& I, const ComplexifiedElement& w) {
  return w.x() + I.element().to_mode(w.mode()) * w.y();
}

}  // namespace slicecalc
