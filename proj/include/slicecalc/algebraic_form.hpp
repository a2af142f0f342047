#pragma once

#include "slicecalc/stem_expr.hpp"

namespace slicecalc {

/// Reduced quotient num/den over ℚ(i) with monic denominator.
struct RatFn {
  GPoly num;
  GPoly den = GPoly(GaussQ(1));

  RatFn() = default;
  RatFn(GPoly n, GPoly d);
  static RatFn constant(const GaussQ& c) { return RatFn(GPoly(c), GPoly(GaussQ(1))); }

  bool is_zero() const { return num.is_zero_poly(); }
  bool is_polynomial() const { return den.degree() == 0; }
  Cplx eval(Cplx t) const { return slicecalc::eval(num, t) / slicecalc::eval(den, t); }

  friend RatFn operator+(const RatFn& a, const RatFn& b);
  friend RatFn operator-(const RatFn& a, const RatFn& b);
  friend RatFn operator*(const RatFn& a, const RatFn& b);
  friend RatFn operator/(const RatFn& a, const RatFn& b);
  friend bool operator==(const RatFn& a, const RatFn& b) { return a.num == b.num && a.den == b.den; }
};

/// Closed form r0(t) + σ·r1(t) of a complex component, where t = z^{1/Q} on the
/// principal branch and σ = sign(Im z).
struct AlgebraicForm {
  int Q = 1;
  RatFn r0;
  RatFn r1;

  bool has_sign() const { return !r1.is_zero(); }
  bool is_zero() const { return r0.is_zero() && r1.is_zero(); }
  Cplx eval(Cplx z) const;
};

/// lcm of the radical denominators in the expression.
int radical_index(const ComplexComponentExpr& e);
/// Throws UnsupportedNode (with the node path) on Exp/Cos/Sin/ZBar and
/// NormalIdenticallyZero on reciprocals of the zero function.
AlgebraicForm algebraic_form(const ComplexComponentExpr& e, int Q);
AlgebraicForm algebraic_form(const ComplexComponentExpr& e);

}  // namespace slicecalc
