// One PASS/FAIL line per acceptance criterion. Exit status 1 when any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "slicecalc/algebraic_form.hpp"
#include "slicecalc/dsl.hpp"
#include "slicecalc/error.hpp"
#include "support.hpp"

using namespace slicecalc;
using namespace slicecalc::testing;

namespace {

constexpr double kReprTol = 1e-10;
constexpr double kProductTol = 1e-10;
constexpr double kAnomalyGap = 0.1;
constexpr double kSphereSampleTol = 1e-6;
constexpr double kNearZero = 1e-9;
constexpr double kResidualTol = 1e-8;
constexpr double kDemoTol = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void require(bool cond, const std::string& what) {
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = what;
    }
  }
  void note(const std::string& s) {
    if (out_.ok) out_.detail = s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

AlgebraElement unit_el(AlgebraKind k, int i) { return AlgebraElement::basis(k, i, Mode::Exact); }

// 1. Algebra laws, exact.
Outcome algebra_laws() {
  Check c;
  std::mt19937_64 rng(101);
  for (int t = 0; t < 500; ++t) {
    for (auto k : {AlgebraKind::H, AlgebraKind::O}) {
      auto x = random_element(k, rng), y = random_element(k, rng), z = random_element(k, rng);
      if (k == AlgebraKind::H) c.require((x * y) * z == x * (y * z), "associativity in H");
      else c.require(associator(x, x, y).is_zero(), "alternativity in O");
      c.require(trace_norm(x * y).second == trace_norm(x).second * trace_norm(y).second, "norm multiplicativity");
      c.require(cd_conj(x * y) == cd_conj(y) * cd_conj(x), "conjugate of a product");
      if (!x.is_zero()) c.require(x * cd_inverse(x) == AlgebraElement::one(k, Mode::Exact), "inverse");
    }
  }
  c.note("500 exact samples in H and O");
  return c.result();
}

// 2. Piecewise stem 1+ιJ on the upper half plane.
Outcome piecewise_example() {
  Check c;
  std::mt19937_64 rng(202);
  const auto k = AlgebraKind::H;
  for (int t = 0; t < 5; ++t) {
    ImaginaryUnit J = random_unit(k, rng);
    const auto one = AlgebraElement::one(k, Mode::Exact);
    ComplexifiedElement a(one, J.element()), b(one, -J.element());
    c.require(cx_mul(a, b).is_zero(), "(1+ιJ)(1−ιJ) is not zero");

    SliceFunction f(StemExpr::piecewise_sign(a), DomainSpec::upper_lower_pair());
    SliceFunction n = normal(f);
    for (int s = 0; s < 10; ++s) {
      ComplexPoint z(Scalar(random_rational(rng)), Scalar(random_rational(rng)));
      if (z.beta.is_zero()) continue;
      c.require(stem_eval(n.stem(), z, n.domain()).is_zero(), "N(f) does not vanish");
    }
    SplittingBase B = make_splitting_base(J);
    const AlgebraElement& K = B.units()[0];
    for (int s = 0; s < 10; ++s) {
      Scalar beta(mpq_class(s + 1, 3));
      c.require(slice_eval(f, J.element().scaled(beta)).is_zero(), "f(βJ) is not zero");
      c.require(!slice_eval(f, K.scaled(beta)).is_zero(), "f(βK) vanishes for K ⊥ J");
    }
    ZeroSet zs = poly_zero_set(f);
    c.require(zs.exceptional_half_slice && zs.exceptional_half_slice->element() == J.element(),
              "zero set is not the half slice of J");
  }
  c.note("5 random units J, exact");
  return c.result();
}

// 3. Representation formula.
Outcome representation_formula() {
  Check c;
  std::mt19937_64 rng(303);
  double worst = 0;
  for (int fi = 0; fi < 20; ++fi) {
    const auto k = fi % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    SliceFunction f = SliceFunction::from_stem(random_stem(k, rng, 2, true));
    auto pts = f.domain().sample(10, static_cast<std::uint64_t>(fi) + 1);
    for (int p = 0; p < 10; ++p) {
      ImaginaryUnit I = random_unit(k, rng, Mode::Float), J = random_unit(k, rng, Mode::Float);
      for (int s = 0; s < 20; ++s) {
        Cplx z = pts[static_cast<std::size_t>((p * 20 + s) % static_cast<int>(pts.size()))];
        AlgebraElement expect = slice_eval(f, point_on(J, z));
        AlgebraElement got = representation_check(f, I, J, Scalar(z.real()), Scalar(z.imag()));
        worst = std::max(worst, (got - expect).abs() / (1 + expect.abs()));
      }
    }
  }
  c.require(worst <= kReprTol, "max deviation " + fmt(worst));
  c.note("max relative deviation " + fmt(worst));
  return c.result();
}

// 4. Slice product with a slice-preserving left factor, and the octonion anomaly.
Outcome product_semantics() {
  Check c;
  std::mt19937_64 rng(404);
  auto one = [](AlgebraKind k) { return ComplexifiedElement::one(k, Mode::Exact); };
  double worst = 0;
  for (int t = 0; t < 10; ++t) {
    const auto k = t % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    StemExpr preserving[] = {
        StemExpr::poly_ratio(random_real_poly(rng, 3), GPoly({GaussQ(2), GaussQ(0), GaussQ(1)}), one(k)),
        StemExpr::radical(1, 2, one(k)),
        StemExpr::transcendental(ScalarFnKind::Exp, one(k)),
    };
    SliceFunction f = SliceFunction::from_stem(preserving[t % 3]);
    c.require(is_slice_preserving(f), "fixture is not slice preserving");
    SliceFunction g = SliceFunction::from_stem(random_stem(k, rng, 2, true));
    SliceFunction fg = slice_product(f, g);
    auto pts = fg.domain().sample(10, static_cast<std::uint64_t>(t) + 40);
    for (int s = 0; s < 10; ++s) {
      AlgebraElement x = point_on(random_unit(k, rng, Mode::Float), pts[static_cast<std::size_t>(s)]);
      AlgebraElement lhs = slice_eval(fg, x);
      AlgebraElement rhs = slice_eval(f, x) * slice_eval(g, x);
      worst = std::max(worst, (lhs - rhs).abs() / (1 + rhs.abs()));
    }
  }
  c.require(worst <= kProductTol, "max deviation " + fmt(worst));

  const auto O = AlgebraKind::O;
  const AlgebraElement I = unit_el(O, 1), L = unit_el(O, 4), x = unit_el(O, 2);
  SliceFunction xI = SliceFunction::from_stem(StemExpr::mul(StemExpr::z(O), StemExpr::constant(I)));
  SliceFunction prod = slice_product(xI, SliceFunction::constant(L));
  AlgebraElement slice_value = slice_eval(prod, x);
  AlgebraElement pointwise = slice_eval(xI, x) * L;
  double gap = (slice_value - pointwise).abs();
  c.require(gap > kAnomalyGap, "octonion anomaly gap " + fmt(gap));
  c.note("100 points, max deviation " + fmt(worst) + "; anomaly gap " + fmt(gap));
  return c.result();
}

// 5. Normal function of slice polynomials.
Outcome normal_multiplicativity() {
  Check c;
  std::mt19937_64 rng(505);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int t = 0; t < 100; ++t) {
    const auto k = t % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    SlicePolynomial P = random_slice_poly(k, rng, deg(rng)), Q = random_slice_poly(k, rng, deg(rng));
    c.require(poly_normal(poly_slice_mul(P, Q)) == poly_normal(P) * poly_normal(Q),
              std::string("N(PQ) != N(P)N(Q) in ") + kind_name(k));
  }
  const auto H = AlgebraKind::H;
  SlicePolynomial lin(H, {-unit_el(H, 1), AlgebraElement::one(H, Mode::Exact)});
  ComplexPolynomial expect = ComplexPolynomial::from_gpoly(GPoly({GaussQ(1), GaussQ(0), GaussQ(1)}));
  c.require(poly_normal(lin) == expect, "N(x−i) != x²+1");
  c.note("100 exact pairs in H and O");
  return c.result();
}

// 6. Zero sets of slice polynomials.
Outcome zero_sets() {
  Check c;
  const auto H = AlgebraKind::H;
  const auto one = AlgebraElement::one(H, Mode::Exact), zero = AlgebraElement::zero(H, Mode::Exact);
  ZeroSet s = poly_zeros(SlicePolynomial(H, {one, zero, one}));
  c.require(s.spherical_zeros.size() == 1 && s.isolated_zeros.empty() && s.real_zeros.empty(),
            "x²+1 zero set shape");
  if (!s.spherical_zeros.empty())
    c.require(s.spherical_zeros[0].alpha.is_zero() && s.spherical_zeros[0].beta == Scalar(mpq_class(1)),
              "x²+1 sphere is not (0,1)");

  SlicePolynomial P = poly_slice_mul(SlicePolynomial(H, {-unit_el(H, 1), one}), SlicePolynomial(H, {-unit_el(H, 2), one}));
  ZeroSet z = poly_zeros(P);
  c.require(z.spherical_zeros.empty() && z.real_zeros.empty() && z.isolated_zeros.size() == 1 &&
                z.isolated_zeros[0] == unit_el(H, 1),
            "(x−i)·(x−j) zero set is not {i}");
  c.require(poly_eval(P, unit_el(H, 1)).is_zero(), "P(i) != 0");

  // Dense sampling of the unit sphere of imaginary quaternions.
  std::mt19937_64 rng(606);
  std::normal_distribution<double> g;
  SlicePolynomial Pf = P.to_mode(Mode::Float);
  const AlgebraElement iF = unit_el(H, 1).to_mode(Mode::Float);
  double best = 1e300, best_dist = 0;
  for (int t = 0; t < 10000; ++t) {
    double v[3] = {g(rng), g(rng), g(rng)};
    double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    AlgebraElement u = AlgebraElement::from_doubles(H, {0, v[0] / n, v[1] / n, v[2] / n});
    double val = poly_eval(Pf, u).abs(), dist = (u - iF).abs();
    if (val <= kNearZero) c.require(dist <= kSphereSampleTol, "small |P| away from i");
    if (val < best) {
      best = val;
      best_dist = dist;
    }
  }
  c.require(best_dist < 0.1, "sampled minimiser of |P| is not near i");

  std::mt19937_64 r2(607);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int t = 0; t < 50; ++t) {
    SlicePolynomial Q = SlicePolynomial::constant(one);
    if (t % 2 == 0) {
      Q = random_slice_poly(H, r2, deg(r2));
    } else {
      int d = deg(r2);
      for (int f = 0; f < d; ++f) {
        AlgebraElement root = random_element(H, r2, 3);
        if (f % 2 == 1) root = AlgebraElement::real(H, Scalar(random_rational(r2, 3))) + unit_el(H, 1 + f % 3);
        Q = poly_slice_mul(Q, SlicePolynomial(H, {-root, one}));
      }
    }
    ZeroSet zs = poly_zeros(Q);
    c.require(static_cast<int>(zs.count()) <= 2 * Q.degree(), "zero count exceeds deg N(P)");
  }
  c.note("sphere, isolated i, 10^4 sphere samples, 50 count bounds");
  return c.result();
}

// 7. Cauchy root bound.
Outcome cauchy_bound() {
  Check c;
  std::mt19937_64 rng(707);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<int> deg(1, 10);
  std::uniform_real_distribution<double> scale(-3, 3);
  double worst = 0;
  for (int t = 0; t < 200; ++t) {
    int d = deg(rng);
    std::vector<ComplexPoint> cs;
    double sc = std::pow(10.0, scale(rng));
    for (int s = 0; s <= d; ++s) cs.push_back(ComplexPoint::from_complex({g(rng) * sc, g(rng) * sc}));
    ComplexPolynomial P(cs);
    double R = cauchy_root_bound(P).to_double();
    for (const Root& r : complex_roots(P)) {
      double m = std::abs(r.z.to_complex());
      c.require(m < R, "root outside the bound");
      worst = std::max(worst, m / R);
    }
  }
  c.note("200 polynomials, max |root|/R = " + fmt(worst));
  return c.result();
}

SplittingBase base_at_i(AlgebraKind k) { return make_splitting_base(ImaginaryUnit(unit_el(k, 1))); }

// 8. Nash certification of the fixtures.
Outcome nash_certification() {
  Check c;
  const auto H = AlgebraKind::H;
  SliceFunction f = parse_expr("sqrt(z)*[j]", H);
  NashCertificate cert = certify_slice_nash(f, base_at_i(H));
  c.require(cert.status == CertStatus::Certified, "sqrt(z)*[j] not certified");
  BiPoly expect = BiPoly(std::vector<GPoly>{GPoly(std::vector<GaussQ>{GaussQ(0), GaussQ(-1)}), GPoly(), GPoly(GaussQ(1))});
  bool found = false;
  for (const auto& a : cert.per_component) found = found || a == normalize_annihilator(expect);
  c.require(found, "no component annihilator equals z2²−z1");
  c.require(cert.max_residual <= kResidualTol, "residual " + fmt(cert.max_residual));

  std::mt19937_64 rng(808);
  double worst = cert.max_residual;
  for (int d = 1; d <= 8; ++d) {
    for (auto k : {AlgebraKind::H, AlgebraKind::O}) {
      SlicePolynomial P = random_slice_poly(k, rng, d);
      NashCertificate pc = certify_slice_nash(P.to_function(), make_splitting_base(random_unit(k, rng)));
      c.require(pc.status == CertStatus::Certified, "degree " + std::to_string(d) + " polynomial not certified");
      c.require(pc.max_residual <= kResidualTol, "polynomial residual " + fmt(pc.max_residual));
      worst = std::max(worst, pc.max_residual);
    }
  }
  for (const char* text : {"cos(z)*[i]+sin(z)*[j]", "cos(z)*[i]", "sin(z)*[j]"}) {
    NashCertificate u = certify_slice_nash(parse_expr(text, H), base_at_i(H));
    c.require(u.status == CertStatus::UnsupportedNode, std::string(text) + " not reported unsupported");
  }
  c.note("max residual " + fmt(worst));
  return c.result();
}

std::optional<NashCertificate> try_certify(const SliceFunction& f, const SplittingBase& B) {
  try {
    NashCertificate c = certify_slice_nash(f, B);
    if (c.status == CertStatus::Certified) return c;
  } catch (const Error&) {
  }
  return std::nullopt;
}

// 9. Closure of certified functions under the ring operations.
Outcome closure_suite() {
  Check c;
  std::mt19937_64 rng(909);
  int pairs = 0, reciprocals = 0, attempts = 0;
  double worst = 0;
  while (pairs < 20 && attempts < 400) {
    ++attempts;
    const auto k = pairs % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    SplittingBase B = make_splitting_base(random_imaginary_unit(k, rng() % 16));
    SliceFunction f = SliceFunction::from_stem(random_stem(k, rng, 1));
    SliceFunction g = SliceFunction::from_stem(random_stem(k, rng, 1));
    if (!try_certify(f, B) || !try_certify(g, B)) continue;
    ++pairs;
    std::vector<std::pair<std::string, SliceFunction>> derived = {
        {"f+g", slice_sum(f, g)}, {"f*g", slice_product(f, g)}, {"f^c", slice_conjugate(f)},
        {"N(f)", normal(f)},      {"df", slice_derivative(f)}};
    try {
      derived.emplace_back("f^-1", reciprocal(f));
      ++reciprocals;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NormalIdenticallyZero) throw;
    }
    for (const auto& [name, h] : derived) {
      NashCertificate hc = certify_slice_nash(h, B);
      c.require(hc.status == CertStatus::Certified, name + " of " + render(f.stem()) + " not certified: " + hc.detail);
      c.require(hc.max_residual <= kResidualTol, name + " residual " + fmt(hc.max_residual));
      worst = std::max(worst, hc.max_residual);
    }
  }
  c.require(pairs == 20, "only " + std::to_string(pairs) + " certified pairs generated");
  c.note(std::to_string(pairs) + " pairs, " + std::to_string(reciprocals) + " reciprocals, max residual " + fmt(worst));
  return c.result();
}

// 10. Reconstruction of slice polynomials and quotients Q^{-•}·P.
Outcome reconstruction() {
  Check c;
  std::mt19937_64 rng(1010);
  for (auto k : {AlgebraKind::H, AlgebraKind::O}) {
    SlicePolynomial P = random_slice_poly(k, rng, 4);
    SplittingBase B = make_splitting_base(random_unit(k, rng));
    // Present f by its splitting components only: f = Σ f_k(z)·I_k.
    auto comps = splitting_components(P.to_function(), B);
    StemExpr stem = StemExpr::zero(k);
    for (std::size_t j = 0; j < comps.size(); ++j) {
      ComplexifiedElement coef(B.full_basis()[2 * j]);
      StemExpr part = StemExpr::zero(k);
      AlgebraicForm af = algebraic_form(comps[j]);
      // f_k = Σ (a + ιb) zʳ contributes zʳ (a + b I) I_k on the slice.
      GPoly num = af.r0.num;
      GPoly re_part, im_part;
      for (int r = 0; r <= num.degree(); ++r) {
        re_part.set_coeff(r, GaussQ(num.coeff(r).re));
        im_part.set_coeff(r, GaussQ(num.coeff(r).im));
      }
      part = StemExpr::add(StemExpr::poly_ratio(re_part, GPoly(GaussQ(1)), coef),
                           StemExpr::poly_ratio(im_part, GPoly(GaussQ(1)),
                                                ComplexifiedElement(B.I().element() * B.full_basis()[2 * j])));
      stem = StemExpr::add(stem, part);
    }
    RationalSliceFn r = reconstruct_rational(SliceFunction::from_stem(stem), B);
    c.require(r.Q == SlicePolynomial::constant(AlgebraElement::one(k, Mode::Exact)), "Q != 1 for a polynomial");
    c.require(r.P == P, "polynomial not recovered");
    c.require(r.residual == 0, "nonzero residual " + fmt(r.residual));
  }

  double worst = 0;
  std::uniform_int_distribution<int> dq(1, 6), dp(0, 4);
  for (int t = 0; t < 10; ++t) {
    const auto k = t % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    SlicePolynomial P = random_slice_poly(k, rng, dp(rng), 3);
    // Real monic Q with no root on the real axis shared by P.
    int d = dq(rng);
    std::vector<AlgebraElement> qc;
    for (int s = 0; s < d; ++s) qc.push_back(AlgebraElement::real(k, Scalar(random_rational(rng, 3))));
    qc.push_back(AlgebraElement::one(k, Mode::Exact));
    SlicePolynomial Q(k, qc);
    SliceFunction Qf = Q.to_function();
    SliceFunction f = slice_product(reciprocal(Qf), P.to_function());
    SplittingBase B = make_splitting_base(random_unit(k, rng));
    RationalSliceFn r = reconstruct_rational(f, B);
    // Compare f = Q^{-•}P with r.Q^{-•}r.P: both Q real, so r.Q·P = Q·r.P.
    c.require(poly_slice_mul(r.Q, P) == poly_slice_mul(Q, r.P), "quotient not recovered up to a common factor");
    c.require(r.residual <= kResidualTol, "evaluation residual " + fmt(r.residual));
    worst = std::max(worst, r.residual);
  }
  c.note("polynomials exact, 10 quotient round trips, max residual " + fmt(worst));
  return c.result();
}

// 11. Singularities.
Outcome singularities() {
  Check c;
  const auto H = AlgebraKind::H;
  SplittingBase B = base_at_i(H);
  const ComplexPoint zero = ComplexPoint::zero(Mode::Exact);

  SliceFunction inv = parse_expr("recip(z)", H);
  NashCertificate ic = certify_slice_nash(inv, B);
  c.require(ic.status == CertStatus::Certified, "1/z not certified");
  auto ev0 = [&](Cplx z) { return component_eval(ic.components[0], z, inv.domain()); };
  c.require(classify_singularity(ic.per_component[0], zero, ev0) == SingularityKind::Pole, "1/z at 0 is not a pole");
  c.require(classify_singularity(ic.per_component[0], zero) == SingularityKind::Pole, "1/z lc test");

  SliceFunction sq = parse_expr("sqrt(z)*[j]", H);
  NashCertificate sc = certify_slice_nash(sq, B);
  for (const auto& [re, im] : std::vector<std::pair<int, int>>{{4, 0}, {1, 1}, {1, -2}, {9, 3}}) {
    ComplexPoint z0{Scalar(mpq_class(re)), Scalar(mpq_class(im))};
    for (std::size_t k = 0; k < sc.per_component.size(); ++k) {
      auto ev = [&](Cplx z) { return component_eval(sc.components[k], z, sq.domain()); };
      c.require(classify_singularity(sc.per_component[k], z0, ev) == SingularityKind::Removable,
                "sqrt(z) regular point not removable");
    }
  }

  SliceFunction r = reciprocal(parse_expr("z^2+1", H));
  ComplexPoint i1(Scalar(mpq_class(0)), Scalar(mpq_class(1))), i2(Scalar(mpq_class(0)), Scalar(mpq_class(2)));
  SemiregularResult sr = certify_semiregular_nash(r, B, {i1, i2});
  c.require(sr.kept_poles.size() == 1 && sr.kept_poles[0] == i1, "S_i not kept as a pole");
  c.require(sr.removed.size() == 1 && sr.removed[0] == i2, "S_2i not removed");
  c.note("pole at 0, removable sqrt points, S_i kept, S_2i removed");
  return c.result();
}

// 12. Bounds at infinity.
Outcome bounds() {
  Check c;
  const auto H = AlgebraKind::H;
  std::mt19937_64 rng(1212);
  auto run = [&](const SliceFunction& f, const SplittingBase& B, int expect_m, const std::string& name) {
    NashCertificate cert = certify_slice_nash(f, B);
    if (cert.status != CertStatus::Certified) {
      c.require(false, name + " not certified");
      return;
    }
    BoundCertificate b = slice_poly_bound(f, cert);
    BoundCheck chk = validate_slice_bound(b, f);
    c.require(chk.passed && chk.margin >= 0, name + " bound margin " + fmt(chk.margin));
    if (expect_m >= 0) c.require(b.m == expect_m, name + " m = " + std::to_string(b.m));
    for (std::size_t k = 0; k < cert.per_component.size(); ++k) {
      BoundCertificate bk = poly_bound_at_infinity(cert.per_component[k]);
      auto ev = [&](Cplx z) { return component_eval(cert.components[k], z, f.domain()); };
      BoundCheck ck = validate_bound(bk, ev, f.domain());
      c.require(ck.passed && ck.margin >= 0, name + " component bound margin " + fmt(ck.margin));
    }
  };
  run(parse_expr("sqrt(z)*[j]", H), base_at_i(H), 1, "sqrt(x)J");
  run(parse_expr("z^2", H), base_at_i(H), 2, "x^2");
  for (int d = 1; d <= 6; ++d) {
    const auto k = d % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    SlicePolynomial P = random_slice_poly(k, rng, d);
    run(P.to_function(), make_splitting_base(random_unit(k, rng)), d, "random degree " + std::to_string(d));
  }
  int n = 0;
  while (n < 8) {
    const auto k = n % 2 == 0 ? AlgebraKind::H : AlgebraKind::O;
    SplittingBase B = make_splitting_base(random_imaginary_unit(k, rng() % 16));
    SliceFunction f = SliceFunction::from_stem(random_stem(k, rng, 1));
    if (!try_certify(f, B)) continue;
    run(f, B, -1, "grammar " + render(f.stem()));
    ++n;
  }
  c.note("all emitted bounds validated on 256 samples");
  return c.result();
}

// 13. Ordered evaluation demo and the mixed real part.
Outcome demo() {
  Check c;
  const auto H = AlgebraKind::H;
  SliceFunction f = parse_expr("cos(z)*[i]+sin(z)*[j]", H);
  OrderedPoly2 P2{H, {}};
  P2.coeffs.emplace(std::pair{0, 2}, AlgebraElement::one(H, Mode::Exact));
  P2.coeffs.emplace(std::pair{0, 0}, AlgebraElement::one(H, Mode::Exact));
  std::mt19937_64 rng(1313);
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    AlgebraElement q = random_float_element(H, rng);
    worst = std::max(worst, ordered_eval_bullet(P2, f, q).abs());
  }
  c.require(worst <= kDemoTol, "max |P2(q, f(q))| = " + fmt(worst));
  for (int t = 0; t < 100; ++t) {
    AlgebraElement q = random_element(H, rng);
    c.require(real_part_mixed(q) == AlgebraElement::real(H, q.re()), "mixed real part differs from Re(q)");
  }
  c.note("max |P2(q, f(q))| = " + fmt(worst) + "; 100 exact mixed real parts");
  return c.result();
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"algebra laws", algebra_laws},
      {"piecewise stem and half-slice zero set", piecewise_example},
      {"representation formula", representation_formula},
      {"slice product semantics", product_semantics},
      {"normal multiplicativity", normal_multiplicativity},
      {"zero sets", zero_sets},
      {"Cauchy root bound", cauchy_bound},
      {"Nash certification", nash_certification},
      {"closure suite", closure_suite},
      {"rational reconstruction", reconstruction},
      {"singularity classification", singularities},
      {"bounds at infinity", bounds},
      {"ordered evaluation and mixed real part", demo},
  };
  int failed = 0, n = 0;
  for (const auto& [name, fn] : criteria) {
    ++n;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s %2d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL", n, name, o.detail.c_str(), secs);
    if (!o.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
