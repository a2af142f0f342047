#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "slicecalc/slice_fn.hpp"

namespace slicecalc {

/// P(x) = Σ xˢ c_s with coefficients on the right.
class SlicePolynomial {
 public:
  SlicePolynomial(AlgebraKind kind, std::vector<AlgebraElement> coeffs);
  static SlicePolynomial constant(const AlgebraElement& a) { return {a.kind(), {a}}; }
  /// x·1 in the given mode.
  static SlicePolynomial x(AlgebraKind k, Mode m = Mode::Exact);

  AlgebraKind kind() const { return kind_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<AlgebraElement>& coeffs() const { return c_; }
  AlgebraElement coeff(int s) const;
  Mode mode() const;
  SlicePolynomial to_mode(Mode m) const;

  /// Σ zˢ c_s as a stem expression.
  StemExpr stem() const;
  SliceFunction to_function() const { return SliceFunction(stem(), DomainSpec::full_plane()); }

  friend SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b);
  friend SlicePolynomial operator-(const SlicePolynomial& a, const SlicePolynomial& b);
  SlicePolynomial scaled_right(const AlgebraElement& a) const;
  friend bool operator==(const SlicePolynomial& a, const SlicePolynomial& b) {
    return a.kind_ == b.kind_ && a.c_ == b.c_;
  }

 private:
  AlgebraKind kind_;
  std::vector<AlgebraElement> c_;
};

/// Coefficients of a polynomial in ℂ[z] (Gaussian rationals in Exact mode), low degree first.
struct ComplexPolynomial {
  std::vector<ComplexPoint> coeffs;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<ComplexPoint> c);
  static ComplexPolynomial from_gpoly(const GPoly& p);
  static ComplexPolynomial from_real(const std::vector<Scalar>& c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Mode mode() const;
  bool is_exact() const { return mode() == Mode::Exact; }
  GPoly to_gpoly() const;
  std::vector<Cplx> to_complex() const;
  Cplx eval(Cplx z) const;
  /// Largest coefficient modulus.
  double max_abs() const;

  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);
  friend bool operator==(const ComplexPolynomial& a, const ComplexPolynomial& b) { return a.coeffs == b.coeffs; }
};

struct Root {
  ComplexPoint z;
  int multiplicity = 1;
};

/// Monomials x₁ˢ(x₂ʳα) keyed by (s, r).
struct OrderedPoly2 {
  AlgebraKind kind;
  std::map<std::pair<int, int>, AlgebraElement> coeffs;
};

SlicePolynomial poly_slice_mul(const SlicePolynomial& P, const SlicePolynomial& Q);
AlgebraElement poly_eval(const SlicePolynomial& P, const AlgebraElement& x);
/// N(P) = P·P^c, real coefficients.
ComplexPolynomial poly_normal(const SlicePolynomial& P);
/// x² − x·t(y) + n(y)
SlicePolynomial delta(const AlgebraElement& y);

/// Exact mode: square-free split, exact Gaussian-rational roots where they exist, float
/// for the rest. Float mode: companion eigenvalues, a Newton step, clustering.
std::vector<Root> complex_roots(const ComplexPolynomial& P, double tol = 1e-10);
ZeroSet poly_zeros(const SlicePolynomial& P);
AlgebraElement ordered_eval_bullet(const OrderedPoly2& P2, const SliceFunction& f, const AlgebraElement& x);
/// 1 + Σ_{k<n} |α_k/α_n|; exact when every coefficient is real and exact.
Scalar cauchy_root_bound(const ComplexPolynomial& P);

/// Recovers P from a stem whose canonical components are polynomials with real coefficients.
std::optional<SlicePolynomial> as_slice_polynomial(const SliceFunction& f);

}  // namespace slicecalc
