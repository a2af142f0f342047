#include "slicecalc/slice_fn.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "slicecalc/algebraic_form.hpp"
#include "slicecalc/error.hpp"
#include "slicecalc/slice_poly.hpp"

namespace slicecalc {

namespace {

SplittingBase canonical_base(AlgebraKind k) {
  if (k == AlgebraKind::R) throw Error(ErrorCode::WrongKind, "slice functions need kind C, H or O");
  return make_splitting_base(ImaginaryUnit(AlgebraElement::basis(k, 1, Mode::Exact)));
}

std::vector<Cplx> roots_as_complex(const GPoly& p) {
  std::vector<Cplx> out;
  if (p.degree() < 1) return out;
  for (const auto& r : complex_roots(ComplexPolynomial::from_gpoly(p))) out.push_back(r.z.to_complex());
  return out;
}

bool principal_preimage(Cplx t, int Q) {
  if (Q == 1) return true;
  double a = std::arg(t);
  return std::fabs(a) < std::numbers::pi / Q - 1e-12;
}

// Points z where a central stem vanishes (the punctures of its reciprocal).
std::vector<Cplx> central_zeros(const StemExpr& S) {
  StemExpr s0 = S.kind() == AlgebraKind::R ? S : stem_components(S, canonical_base(S.kind()))[0];
  AlgebraicForm af = algebraic_form(s0);
  if (af.is_zero()) throw Error(ErrorCode::NormalIdenticallyZero, "the normal function vanishes identically");
  std::vector<Cplx> out;
  auto collect = [&](const GPoly& num, int half) {
    for (Cplx t : roots_as_complex(num)) {
      if (!principal_preimage(t, af.Q)) continue;
      Cplx z = std::pow(t, af.Q);
      if (half > 0 && z.imag() <= 0) continue;
      if (half < 0 && z.imag() >= 0) continue;
      out.push_back(z);
    }
  };
  if (!af.has_sign()) {
    collect(af.r0.num, 0);
  } else {
    collect((af.r0 + af.r1).num, 1);
    collect((af.r0 - af.r1).num, -1);
  }
  return out;
}

std::vector<Cplx> stem_poles(const StemExpr& F) {
  std::vector<Cplx> out;
  std::function<void(const StemExpr&)> visit = [&](const StemExpr& e) {
    if (e.type() == NodeType::ScalarFn && e.fn().kind == ScalarFnKind::PolyRatio) {
      for (Cplx z : roots_as_complex(e.fn().den)) out.push_back(z);
    }
    if (e.type() == NodeType::Recip && !find_unsupported(e.child())) {
      try {
        for (Cplx z : central_zeros(e.child())) out.push_back(z);
      } catch (const Error& err) {
        if (err.code() != ErrorCode::NormalIdenticallyZero) throw;
      }
    }
    for (const auto& c : e.id()->children) visit(c);
  };
  visit(F);
  return out;
}

void require_same_kind(const SliceFunction& f, const SliceFunction& g) {
  if (f.kind() != g.kind()) throw Error(ErrorCode::KindMismatch, "slice functions of different kinds");
}

ComplexifiedElement iota_R() {
  return {AlgebraElement::zero(AlgebraKind::R, Mode::Exact), AlgebraElement::one(AlgebraKind::R, Mode::Exact)};
}

}  // namespace

SliceFunction SliceFunction::from_stem(StemExpr stem) {
  DomainSpec d = natural_domain(stem).minus_points(stem_poles(stem));
  return SliceFunction(std::move(stem), std::move(d));
}

SliceFunction SliceFunction::constant(const AlgebraElement& a) {
  return SliceFunction(StemExpr::constant(a), DomainSpec::full_plane());
}

PointDecomposition decompose_point(const AlgebraElement& x) {
  Mode m = x.mode();
  AlgebraElement v = x.im();
  Scalar n2 = trace_norm(v).second;
  if (n2.is_zero()) return {x.re(), Scalar::zero(m), std::nullopt};
  Scalar beta = Scalar::zero(m);
  if (m == Mode::Exact) {
    auto r = n2.exact_sqrt();
    if (!r) throw Error(ErrorCode::InexactValue, "|Im x| is irrational; use float mode");
    beta = *r;
  } else {
    beta = Scalar(std::sqrt(n2.to_double()));
  }
  AlgebraElement u = v.scaled(Scalar::one(m) / beta);
  return {x.re(), beta, ImaginaryUnit(u)};
}

AlgebraElement slice_eval(const SliceFunction& f, const AlgebraElement& x) {
  if (x.kind() != f.kind()) throw Error(ErrorCode::KindMismatch, "point and function kinds differ");
  PointDecomposition d = decompose_point(x);
  ComplexPoint z(d.alpha, d.beta);
  ComplexifiedElement w = stem_eval(f.stem(), z, f.domain());
  if (!d.I) {
    bool odd_ok = x.mode() == Mode::Exact ? w.y().is_zero() : w.y().abs() <= 1e-9 * (1 + w.x().abs());
    if (!odd_ok) throw Error(ErrorCode::StemnessViolation, "F2 does not vanish at a real point");
    return w.x();
  }
  return w.x() + d.I->element().to_mode(x.mode()) * w.y();
}

AlgebraElement representation_check(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                                    const Scalar& alpha, const Scalar& beta) {
  Mode m = alpha.mode();
  AlgebraElement Ie = I.element().to_mode(m);
  AlgebraElement Je = J.element().to_mode(m);
  AlgebraElement base = AlgebraElement::real(f.kind(), alpha);
  AlgebraElement a = slice_eval(f, base + Ie.scaled(beta));
  AlgebraElement b = slice_eval(f, base - Ie.scaled(beta));
  Scalar half = Scalar::one(m) / Scalar::from_int(2, m);
  return (a + b).scaled(half) - (Je * (Ie * (a - b))).scaled(half);
}

SliceFunction slice_sum(const SliceFunction& f, const SliceFunction& g) {
  require_same_kind(f, g);
  return SliceFunction(StemExpr::add(f.stem(), g.stem()), f.domain().intersect(g.domain()));
}

SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g) {
  require_same_kind(f, g);
  return SliceFunction(StemExpr::mul(f.stem(), g.stem()), f.domain().intersect(g.domain()));
}

SliceFunction slice_conjugate(const SliceFunction& f) { return SliceFunction(StemExpr::cinv(f.stem()), f.domain()); }

SliceFunction normal(const SliceFunction& f) {
  return SliceFunction(StemExpr::mul(f.stem(), StemExpr::cinv(f.stem())), f.domain());
}

SliceFunction reciprocal(const SliceFunction& f) {
  if (auto path = find_unsupported(f.stem()))
    throw Error(ErrorCode::UnsupportedNode, "reciprocal needs an algebraic stem; found " + *path);
  StemExpr fc = StemExpr::cinv(f.stem());
  StemExpr n = StemExpr::mul(f.stem(), fc);
  std::vector<Cplx> zeros = central_zeros(n);
  return SliceFunction(StemExpr::mul(StemExpr::recip(n), fc), f.domain().minus_points(zeros));
}

SliceFunction slice_derivative(const SliceFunction& f) {
  return SliceFunction(stem_derivative(f.stem()), f.domain());
}

std::vector<ComplexComponentExpr> splitting_components(const SliceFunction& f, const SplittingBase& base) {
  auto comps = stem_components(f.stem(), base);
  StemExpr iota = StemExpr::constant(iota_R());
  std::vector<ComplexComponentExpr> out;
  for (std::size_t k = 0; 2 * k + 1 < comps.size(); ++k)
    out.push_back(simp_add(comps[2 * k], simp_mul(iota, comps[2 * k + 1])));
  return out;
}

std::vector<Cplx> splitting_values(const SliceFunction& f, const SplittingBase& base, Cplx z) {
  AlgebraElement x = phi(base.I(), ComplexPoint::from_complex(z));
  std::vector<Scalar> c = base.coordinates(slice_eval(f, x));
  std::vector<Cplx> out;
  for (std::size_t k = 0; 2 * k + 1 < c.size(); ++k) out.emplace_back(c[2 * k].to_double(), c[2 * k + 1].to_double());
  return out;
}

bool is_slice_preserving(const SliceFunction& f, int n_samples) {
  auto comps = stem_components(f.stem(), canonical_base(f.kind()));
  bool symbolic = true;
  for (std::size_t l = 1; l < comps.size() && symbolic; ++l) {
    if (comps[l].is_zero_const()) continue;
    if (find_unsupported(comps[l])) {
      symbolic = false;
      break;
    }
    try {
      if (!algebraic_form(comps[l]).is_zero()) return false;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NormalIdenticallyZero) throw;
      symbolic = false;
    }
  }
  if (symbolic) return true;
  for (Cplx z : f.domain().sample(n_samples, 7)) {
    ComplexifiedElement w = stem_eval(f.stem(), z, f.domain());
    if (w.x().im().abs() + w.y().im().abs() > 1e-10 * (1 + w.abs())) return false;
  }
  return true;
}

bool is_slice_regular(const SliceFunction& f, int n_samples) {
  return check_holomorphy(f.stem(), f.domain(), n_samples).passed;
}

ZeroSet poly_zero_set(const SliceFunction& f) {
  if (auto path = find_unsupported(f.stem()))
    throw Error(ErrorCode::UnsupportedNode, "zero sets need an algebraic stem; found " + *path);
  StemExpr n = StemExpr::mul(f.stem(), StemExpr::cinv(f.stem()));
  AlgebraicForm af = algebraic_form(stem_components(n, canonical_base(f.kind()))[0]);
  if (af.is_zero()) {
    bool piecewise_constant = !contains_node(f.stem(), NodeType::Z) && !contains_node(f.stem(), NodeType::ZBar) &&
                              !contains_node(f.stem(), NodeType::ScalarFn);
    if (piecewise_constant) {
      ComplexPoint up(Scalar::zero(Mode::Exact), Scalar::one(Mode::Exact));
      ComplexifiedElement w = stem_eval(f.stem(), up, DomainSpec::upper_lower_pair());
      if (!w.y().is_zero()) {
        AlgebraElement I0 = -(w.x() * cd_inverse(w.y()));
        try {
          ZeroSet zs;
          zs.exceptional_half_slice = ImaginaryUnit(I0);
          return zs;
        } catch (const Error&) {
        }
      }
    }
    throw Error(ErrorCode::NormalIdenticallyZero, "the normal function vanishes identically");
  }
  auto P = as_slice_polynomial(f);
  if (!P) throw Error(ErrorCode::NonRationalComponent, "zero sets are computed for slice polynomial stems");
  return poly_zeros(*P);
}

}  // namespace slicecalc
