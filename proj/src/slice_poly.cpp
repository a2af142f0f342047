#include "slicecalc/slice_poly.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "slicecalc/algebraic_form.hpp"
#include "slicecalc/error.hpp"

namespace slicecalc {

namespace {

bool exactly_zero(const AlgebraElement& a) { return a.is_zero(); }

ComplexPoint power(const ComplexPoint& z, int s) {
  ComplexPoint out = ComplexPoint::one(z.mode());
  for (int k = 0; k < s; ++k) out = out * z;
  return out;
}

Cplx horner(const std::vector<Cplx>& c, Cplx z) {
  Cplx v = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * z + *it;
  return v;
}

Cplx horner_derivative(const std::vector<Cplx>& c, Cplx z) {
  Cplx v = 0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * z + static_cast<double>(k) * c[k];
  return v;
}

// Companion-matrix eigenvalues, each refined by Newton while the residual drops.
std::vector<Cplx> numeric_roots(const std::vector<Cplx>& c, double tol) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d < 1) return {};
  if (d == 1) return {-c[0] / c[1]};
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) M(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) M(i, d - 1) = -c[static_cast<std::size_t>(i)] / c.back();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  std::vector<Cplx> out;
  for (int i = 0; i < d; ++i) {
    Cplx r = es.eigenvalues()[i];
    for (int it = 0; it < 4; ++it) {
      Cplx fr = horner(c, r);
      if (std::abs(fr) <= tol) break;
      Cplx dr = horner_derivative(c, r);
      if (dr == Cplx(0)) break;
      Cplx next = r - fr / dr;
      if (std::abs(horner(c, next)) >= std::abs(fr)) break;
      r = next;
    }
    out.push_back(r);
  }
  return out;
}

std::vector<Cplx> gpoly_doubles(const GPoly& p) {
  std::vector<Cplx> out;
  for (const auto& a : p.coeffs()) out.push_back(a.to_complex());
  return out;
}

// Roots of a square-free polynomial, exact wherever a Gaussian rational root exists.
void exact_squarefree_roots(GPoly rem, int mult, double tol, std::vector<Root>& out) {
  while (rem.degree() >= 1) {
    if (rem.degree() == 1) {
      out.push_back({ComplexPoint::from_gauss(-rem.coeff(0) / rem.coeff(1)), mult});
      return;
    }
    std::vector<Cplx> approx = numeric_roots(gpoly_doubles(rem), tol);
    bool found = false;
    for (Cplx r : approx) {
      GaussQ g = snap_gauss(r, 1000000);
      if (!eval(rem, g).is_zero()) continue;
      out.push_back({ComplexPoint::from_gauss(g), mult});
      rem = exact_div(rem, GPoly(std::vector<GaussQ>{-g, GaussQ(1)}));
      found = true;
      break;
    }
    if (!found) {
      for (Cplx r : approx) out.push_back({ComplexPoint::from_complex(r), mult});
      return;
    }
  }
}

}  // namespace

SlicePolynomial::SlicePolynomial(AlgebraKind kind, std::vector<AlgebraElement> coeffs)
    : kind_(kind), c_(std::move(coeffs)) {
  for (const auto& a : c_)
    if (a.kind() != kind_) throw Error(ErrorCode::KindMismatch, "polynomial coefficient of another kind");
  while (!c_.empty() && exactly_zero(c_.back())) c_.pop_back();
}

SlicePolynomial SlicePolynomial::x(AlgebraKind k, Mode m) {
  return {k, {AlgebraElement::zero(k, m), AlgebraElement::one(k, m)}};
}

Mode SlicePolynomial::mode() const { return c_.empty() ? Mode::Exact : c_.front().mode(); }

AlgebraElement SlicePolynomial::coeff(int s) const {
  if (s < 0 || s > degree()) return AlgebraElement::zero(kind_, mode());
  return c_[static_cast<std::size_t>(s)];
}

SlicePolynomial SlicePolynomial::to_mode(Mode m) const {
  std::vector<AlgebraElement> c;
  for (const auto& a : c_) c.push_back(a.to_mode(m));
  return {kind_, std::move(c)};
}

StemExpr SlicePolynomial::stem() const {
  StemExpr out = StemExpr::zero(kind_);
  for (int s = 0; s <= degree(); ++s) {
    const AlgebraElement& a = c_[static_cast<std::size_t>(s)];
    if (exactly_zero(a)) continue;
    StemExpr term = s == 0 ? StemExpr::constant(a)
                           : StemExpr::poly_ratio(GPoly::monomial(GaussQ(1), s), GPoly(GaussQ(1)),
                                                  ComplexifiedElement(a));
    out = simp_add(out, term);
  }
  return out;
}

namespace {

SlicePolynomial combine(const SlicePolynomial& a, const SlicePolynomial& b, int sign) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::KindMismatch, "polynomials of different kinds");
  Mode m = a.is_zero() ? b.mode() : a.mode();
  int n = std::max(a.degree(), b.degree());
  std::vector<AlgebraElement> c;
  for (int s = 0; s <= n; ++s) {
    AlgebraElement x = s <= a.degree() ? a.coeff(s) : AlgebraElement::zero(a.kind(), m);
    AlgebraElement y = s <= b.degree() ? b.coeff(s) : AlgebraElement::zero(a.kind(), m);
    c.push_back(sign > 0 ? x + y : x - y);
  }
  return {a.kind(), std::move(c)};
}

}  // namespace

SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b) { return combine(a, b, 1); }
SlicePolynomial operator-(const SlicePolynomial& a, const SlicePolynomial& b) { return combine(a, b, -1); }

SlicePolynomial SlicePolynomial::scaled_right(const AlgebraElement& a) const {
  std::vector<AlgebraElement> c;
  for (const auto& x : c_) c.push_back(x * a);
  return {kind_, std::move(c)};
}

ComplexPolynomial::ComplexPolynomial(std::vector<ComplexPoint> c) : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
}

ComplexPolynomial ComplexPolynomial::from_gpoly(const GPoly& p) {
  std::vector<ComplexPoint> c;
  for (const auto& a : p.coeffs()) c.push_back(ComplexPoint::from_gauss(a));
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::from_real(const std::vector<Scalar>& c) {
  std::vector<ComplexPoint> out;
  for (const auto& a : c) out.emplace_back(a, Scalar::zero(a.mode()));
  return ComplexPolynomial(std::move(out));
}

Mode ComplexPolynomial::mode() const { return coeffs.empty() ? Mode::Exact : coeffs.front().mode(); }

GPoly ComplexPolynomial::to_gpoly() const {
  std::vector<GaussQ> c;
  for (const auto& a : coeffs) c.push_back(a.to_gauss());
  return GPoly(std::move(c));
}

std::vector<Cplx> ComplexPolynomial::to_complex() const {
  std::vector<Cplx> c;
  for (const auto& a : coeffs) c.push_back(a.to_complex());
  return c;
}

Cplx ComplexPolynomial::eval(Cplx z) const { return horner(to_complex(), z); }

double ComplexPolynomial::max_abs() const {
  double m = 0;
  for (const auto& a : coeffs) m = std::max(m, std::abs(a.to_complex()));
  return m;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  std::vector<ComplexPoint> out(a.coeffs.size() + b.coeffs.size() - 1, ComplexPoint::zero(a.mode()));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out[i + j] = out[i + j] + a.coeffs[i] * b.coeffs[j];
  return ComplexPolynomial(std::move(out));
}

SlicePolynomial poly_slice_mul(const SlicePolynomial& P, const SlicePolynomial& Q) {
  if (P.kind() != Q.kind()) throw Error(ErrorCode::KindMismatch, "polynomials of different kinds");
  if (P.is_zero() || Q.is_zero()) return {P.kind(), {}};
  std::vector<AlgebraElement> c(static_cast<std::size_t>(P.degree() + Q.degree() + 1),
                                AlgebraElement::zero(P.kind(), P.mode()));
  for (int i = 0; i <= P.degree(); ++i)
    for (int j = 0; j <= Q.degree(); ++j) c[static_cast<std::size_t>(i + j)] += P.coeff(i) * Q.coeff(j);
  return {P.kind(), std::move(c)};
}

AlgebraElement poly_eval(const SlicePolynomial& P, const AlgebraElement& x) {
  AlgebraElement out = AlgebraElement::zero(P.kind(), x.mode());
  AlgebraElement pw = AlgebraElement::one(P.kind(), x.mode());
  for (int s = 0; s <= P.degree(); ++s) {
    out += pw * P.coeff(s).to_mode(x.mode());
    pw = pw * x;
  }
  return out;
}

ComplexPolynomial poly_normal(const SlicePolynomial& P) {
  std::vector<AlgebraElement> conj;
  for (const auto& a : P.coeffs()) conj.push_back(cd_conj(a));
  SlicePolynomial N = poly_slice_mul(P, SlicePolynomial(P.kind(), std::move(conj)));
  std::vector<Scalar> c;
  for (const auto& a : N.coeffs()) c.push_back(a.re());
  return ComplexPolynomial::from_real(c);
}

SlicePolynomial delta(const AlgebraElement& y) {
  auto [t, n] = trace_norm(y);
  AlgebraKind k = y.kind();
  Mode m = y.mode();
  return {k, {AlgebraElement::real(k, n), AlgebraElement::real(k, -t), AlgebraElement::one(k, m)}};
}

std::vector<Root> complex_roots(const ComplexPolynomial& P, double tol) {
  if (P.coeffs.empty()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  std::vector<Root> out;
  if (P.degree() < 1) return out;
  if (P.is_exact()) {
    std::vector<GPoly> parts = squarefree_decomposition(P.to_gpoly());
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k].degree() >= 1) exact_squarefree_roots(parts[k], static_cast<int>(k) + 1, tol, out);
    return out;
  }
  std::vector<Cplx> c = P.to_complex();
  struct Cluster {
    Cplx sum;
    int count;
  };
  std::vector<Cluster> clusters;
  for (Cplx r : numeric_roots(c, tol)) {
    bool placed = false;
    for (auto& cl : clusters) {
      Cplx center = cl.sum / static_cast<double>(cl.count);
      if (std::abs(r - center) <= 1e-5 * (1 + std::abs(center))) {
        cl.sum += r;
        ++cl.count;
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({r, 1});
  }
  for (const auto& cl : clusters)
    out.push_back({ComplexPoint::from_complex(cl.sum / static_cast<double>(cl.count)), cl.count});
  return out;
}

ZeroSet poly_zeros(const SlicePolynomial& P) {
  if (P.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero set of the zero polynomial");
  ZeroSet zs;
  if (P.degree() == 0) return zs;
  const AlgebraKind k = P.kind();
  double scale = 0;
  for (const auto& a : P.coeffs()) scale += a.abs();

  for (const Root& r : complex_roots(poly_normal(P))) {
    const bool exact = r.z.mode() == Mode::Exact && P.mode() == Mode::Exact;
    const Mode m = exact ? Mode::Exact : Mode::Float;
    SlicePolynomial Pm = P.to_mode(m);
    ComplexPoint z = r.z.to_mode(m);
    Cplx zc = z.to_complex();
    double zero_tol = 1e-8 * scale * std::pow(1 + std::abs(zc), P.degree());
    auto vanishes = [&](const AlgebraElement& a) { return exact ? a.is_zero() : a.abs() <= zero_tol; };

    bool real_root = exact ? z.beta.is_zero() : std::fabs(zc.imag()) <= 1e-7 * (1 + std::abs(zc));
    if (real_root) {
      Scalar alpha = exact ? z.alpha : Scalar(zc.real());
      if (vanishes(poly_eval(Pm, AlgebraElement::real(k, alpha)))) zs.real_zeros.push_back(alpha);
      continue;
    }
    if (zc.imag() < 0) continue;

    AlgebraElement F1 = AlgebraElement::zero(k, m), F2 = AlgebraElement::zero(k, m);
    for (int s = 0; s <= Pm.degree(); ++s) {
      ComplexPoint zs_pow = power(z, s);
      F1 += Pm.coeff(s).scaled(zs_pow.alpha);
      F2 += Pm.coeff(s).scaled(zs_pow.beta);
    }
    if (vanishes(F1) && vanishes(F2)) {
      zs.spherical_zeros.push_back({z.alpha, z.beta});
      continue;
    }
    if (vanishes(F2)) continue;
    AlgebraElement J = -(F1 * cd_inverse(F2));
    auto [t, n] = trace_norm(J);
    bool unit = exact ? (t.is_zero() && n == Scalar::one(m))
                      : (std::fabs(t.to_double()) <= 1e-8 && std::fabs(n.to_double() - 1) <= 1e-8);
    if (unit) zs.isolated_zeros.push_back(AlgebraElement::real(k, z.alpha) + J.scaled(z.beta));
  }
  return zs;
}

AlgebraElement ordered_eval_bullet(const OrderedPoly2& P2, const SliceFunction& f, const AlgebraElement& x) {
  if (f.kind() != P2.kind) throw Error(ErrorCode::KindMismatch, "ordered polynomial and function kinds differ");
  StemExpr G = StemExpr::zero(P2.kind);
  for (const auto& [key, alpha] : P2.coeffs) {
    auto [s, r] = key;
    StemExpr fr = StemExpr::one(P2.kind);
    for (int i = 0; i < r; ++i) fr = i == 0 ? f.stem() : StemExpr::mul(fr, f.stem());
    StemExpr term = StemExpr::mul(fr, StemExpr::constant(alpha));
    if (s > 0)
      term = StemExpr::mul(
          StemExpr::poly_ratio(GPoly::monomial(GaussQ(1), s), GPoly(GaussQ(1)), ComplexifiedElement::one(P2.kind, Mode::Exact)),
          term);
    G = StemExpr::add(G, term);
  }
  return slice_eval(SliceFunction(G, f.domain()), x);
}

Scalar cauchy_root_bound(const ComplexPolynomial& P) {
  if (P.coeffs.empty()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  bool exact_real = P.is_exact();
  for (const auto& a : P.coeffs) exact_real = exact_real && a.beta.is_exact() && a.beta.is_zero();
  const int n = P.degree();
  if (exact_real) {
    mpq_class lc = P.coeffs.back().alpha.rational();
    mpq_class s = 1;
    for (int k = 0; k < n; ++k) s += abs(P.coeffs[static_cast<std::size_t>(k)].alpha.rational() / lc);
    return Scalar(s);
  }
  std::vector<Cplx> c = P.to_complex();
  double s = 1;
  for (int k = 0; k < n; ++k) s += std::abs(c[static_cast<std::size_t>(k)] / c.back());
  return Scalar(s);
}

std::optional<SlicePolynomial> as_slice_polynomial(const SliceFunction& f) {
  const AlgebraKind k = f.kind();
  if (k == AlgebraKind::R) return std::nullopt;
  SplittingBase base = make_splitting_base(ImaginaryUnit(AlgebraElement::basis(k, 1, Mode::Exact)));
  auto comps = stem_components(f.stem(), base);
  std::vector<GPoly> polys;
  int deg = 0;
  for (const auto& c : comps) {
    if (c.is_zero_const()) {
      polys.emplace_back();
      continue;
    }
    AlgebraicForm af;
    try {
      af = algebraic_form(c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedNode || e.code() == ErrorCode::NormalIdenticallyZero)
        return std::nullopt;
      throw;
    }
    if (af.Q != 1 || af.has_sign() || !af.r0.is_polynomial()) return std::nullopt;
    for (const auto& a : af.r0.num.coeffs())
      if (!a.is_real()) return std::nullopt;
    polys.push_back(af.r0.num);
    deg = std::max(deg, af.r0.num.degree());
  }
  const Mode m = has_float_constants(f.stem()) ? Mode::Float : Mode::Exact;
  std::vector<AlgebraElement> coeffs;
  for (int r = 0; r <= deg; ++r) {
    std::vector<Scalar> coords;
    for (const auto& p : polys) coords.emplace_back(p.coeff(r).re);
    coeffs.push_back(base.from_coords(coords).to_mode(m));
  }
  return SlicePolynomial(k, std::move(coeffs));
}

}  // namespace slicecalc
