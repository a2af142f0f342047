#include <gtest/gtest.h>

#include "slicecalc/dsl.hpp"
#include "slicecalc/error.hpp"
#include "support.hpp"

using namespace slicecalc;
using namespace slicecalc::testing;

namespace {

constexpr auto H = AlgebraKind::H;

AlgebraElement e(AlgebraKind k, int i) { return AlgebraElement::basis(k, i, Mode::Exact); }

}  // namespace

TEST(SliceFn, SquareAtQuaternion) {
  SliceFunction f = parse_expr("z^2", H);
  EXPECT_EQ(slice_eval(f, AlgebraElement::from_rationals(H, {0, 3, 4, 0})), AlgebraElement::real(H, Scalar(mpq_class(-25))));
  SliceFunction c = SliceFunction::constant(e(H, 3));
  EXPECT_EQ(slice_eval(c, e(H, 1)), e(H, 3));
}

TEST(SliceFn, DecomposePoint) {
  auto d = decompose_point(AlgebraElement::from_rationals(H, {1, 0, 3, 4}));
  EXPECT_EQ(d.alpha, Scalar(mpq_class(1)));
  EXPECT_EQ(d.beta, Scalar(mpq_class(5)));
  ASSERT_TRUE(d.I.has_value());
  EXPECT_EQ(d.I->element(), AlgebraElement::from_rationals(H, {0, 0, mpq_class(3, 5), mpq_class(4, 5)}));
  EXPECT_THROW(decompose_point(e(H, 1) + e(H, 2)), Error);
  EXPECT_FALSE(decompose_point(AlgebraElement::real(H, Scalar(mpq_class(2)))).I.has_value());
}

TEST(SliceFn, RepresentationFormula) {
  std::mt19937_64 rng(11);
  for (auto k : {AlgebraKind::H, AlgebraKind::O}) {
    for (int t = 0; t < 8; ++t) {
      SliceFunction f = SliceFunction::from_stem(random_stem(k, rng, 2, true));
      ImaginaryUnit I = random_unit(k, rng, Mode::Float), J = random_unit(k, rng, Mode::Float);
      for (Cplx z : f.domain().sample(5, 2)) {
        AlgebraElement direct = slice_eval(f, point_on(J, z));
        AlgebraElement rebuilt = representation_check(f, I, J, Scalar(z.real()), Scalar(z.imag()));
        EXPECT_LT((direct - rebuilt).abs(), 1e-10 * (1 + direct.abs())) << render(f.stem());
      }
    }
  }
}

TEST(SliceFn, SliceSquareOfXI) {
  SliceFunction f = parse_expr("z*[i]", H);
  SliceFunction g = slice_product(f, f);
  for (auto x : {e(H, 2), AlgebraElement::from_rationals(H, {1, 0, 3, 4})}) {
    AlgebraElement xx = x * x;
    EXPECT_EQ(slice_eval(g, x), -xx);
  }
}

TEST(SliceFn, RightConstantLawInQuaternions) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 10; ++t) {
    SliceFunction f = SliceFunction::from_stem(random_stem(H, rng, 1));
    AlgebraElement q0 = random_element(H, rng);
    SliceFunction fq = slice_product(f, SliceFunction::constant(q0));
    for (Cplx z : fq.domain().sample(3, 5)) {
      AlgebraElement x = point_on(random_unit(H, rng, Mode::Float), z);
      AlgebraElement lhs = slice_eval(fq, x), rhs = slice_eval(f, x) * q0.to_mode(Mode::Float);
      EXPECT_LT((lhs - rhs).abs(), 1e-10 * (1 + rhs.abs()));
    }
  }
}

TEST(SliceFn, QuaternionProductIsAssociativeOnPolynomials) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 10; ++t) {
    auto f = random_slice_poly(H, rng, 2).to_function(), g = random_slice_poly(H, rng, 2).to_function(),
         h = random_slice_poly(H, rng, 2).to_function();
    SliceFunction a = slice_product(slice_product(f, g), h), b = slice_product(f, slice_product(g, h));
    AlgebraElement x = random_element(AlgebraKind::H, rng);
    x = AlgebraElement::from_rationals(H, {x[0].rational(), 3, 4, 0});
    EXPECT_EQ(slice_eval(a, x), slice_eval(b, x));
  }
}

TEST(SliceFn, NormalOfLinear) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 10; ++t) {
    AlgebraElement y = random_element(H, rng);
    SliceFunction f = SlicePolynomial(H, {-y, AlgebraElement::one(H, Mode::Exact)}).to_function();
    SliceFunction n = normal(f);
    EXPECT_TRUE(is_slice_preserving(n));
    auto delta_y = delta(y).to_function();
    AlgebraElement x = AlgebraElement::from_rationals(H, {1, 0, 3, 4});
    EXPECT_EQ(slice_eval(n, x), slice_eval(delta_y, x));
    EXPECT_EQ(slice_eval(normal(slice_conjugate(f)), x), slice_eval(n, x));
  }
  EXPECT_FALSE(is_slice_preserving(parse_expr("z*[i]", H)));
  EXPECT_TRUE(is_slice_preserving(parse_expr("z^3 + 2*z", H)));
}

TEST(SliceFn, ReciprocalIsInverse) {
  std::mt19937_64 rng(15);
  for (auto k : {AlgebraKind::H, AlgebraKind::O}) {
    for (int t = 0; t < 10; ++t) {
      SliceFunction f = random_slice_poly(k, rng, 2).to_function();
      SliceFunction r = reciprocal(f);
      SliceFunction one_r = slice_product(f, r), one_l = slice_product(r, f);
      for (Cplx z : r.domain().sample(4, 3)) {
        AlgebraElement x = point_on(random_unit(k, rng, Mode::Float), z);
        EXPECT_LT((slice_eval(one_r, x) - AlgebraElement::one(k, Mode::Float)).abs(), 1e-9);
        EXPECT_LT((slice_eval(one_l, x) - AlgebraElement::one(k, Mode::Float)).abs(), 1e-9);
      }
    }
  }
  SliceFunction r = reciprocal(parse_expr("z-[i]", H));
  EXPECT_FALSE(r.domain().contains(Cplx(0, 1)));
  EXPECT_FALSE(r.domain().contains(Cplx(0, -1)));
}

TEST(SliceFn, ExceptionalHalfSlice) {
  const auto one = AlgebraElement::one(H, Mode::Exact);
  SliceFunction f(StemExpr::piecewise_sign({one, e(H, 2)}), DomainSpec::upper_lower_pair());
  EXPECT_THROW(reciprocal(f), Error);
  ZeroSet zs = poly_zero_set(f);
  ASSERT_TRUE(zs.exceptional_half_slice.has_value());
  EXPECT_EQ(zs.exceptional_half_slice->element(), e(H, 2));
  // Representation formula with I ≠ ±J rebuilds the zero on the half slice of J.
  ImaginaryUnit I(e(H, 1)), J(e(H, 2));
  EXPECT_TRUE(representation_check(f, I, J, Scalar(mpq_class(1)), Scalar(mpq_class(2))).is_zero());
}

TEST(SliceFn, Derivative) {
  SliceFunction f = parse_expr("z^3*[j]", H);
  SliceFunction d = slice_derivative(f);
  AlgebraElement x = AlgebraElement::from_rationals(H, {1, 2, 0, 0});
  EXPECT_EQ(slice_eval(d, x), (x * x).scaled(Scalar(mpq_class(3))) * e(H, 2));
  SliceFunction s = slice_derivative(parse_expr("sqrt(z)*[j]", H));
  AlgebraElement v = slice_eval(s, AlgebraElement::real(H, Scalar(4.0)));
  EXPECT_NEAR(v[2].to_double(), 0.25, 1e-12);
  EXPECT_TRUE(slice_eval(slice_derivative(parse_expr("[k]", H)), e(H, 1)).is_zero());
}

TEST(SliceFn, SplittingValuesMatchComponents) {
  std::mt19937_64 rng(16);
  for (auto k : {AlgebraKind::H, AlgebraKind::O}) {
    for (int t = 0; t < 8; ++t) {
      SliceFunction f = SliceFunction::from_stem(random_stem(k, rng, 2));
      SplittingBase B = make_splitting_base(random_unit(k, rng));
      auto comps = splitting_components(f, B);
      ASSERT_EQ(static_cast<int>(comps.size()), u_A(k) + 1);
      for (Cplx z : f.domain().sample(4, 8)) {
        auto vals = splitting_values(f, B, z);
        for (std::size_t j = 0; j < comps.size(); ++j) {
          Cplx sym = component_eval(comps[j], z, f.domain());
          EXPECT_LT(std::abs(sym - vals[j]), 1e-9 * (1 + std::abs(sym)));
        }
      }
    }
  }
  SliceFunction g = parse_expr("sqrt(z)*[j]", H);
  auto comps = splitting_components(g, make_splitting_base(ImaginaryUnit(e(H, 1))));
  EXPECT_TRUE(comps[0].is_zero_const());
  EXPECT_NEAR(std::abs(component_eval(comps[1], Cplx(4, 0), g.domain()) - Cplx(2, 0)), 0.0, 1e-14);
}

TEST(SliceFn, Regularity) {
  EXPECT_TRUE(is_slice_regular(parse_expr("sqrt(z)*[j] + z^2", H)));
  EXPECT_FALSE(is_slice_regular(SliceFunction(StemExpr::zbar(H), DomainSpec::full_plane())));
}
