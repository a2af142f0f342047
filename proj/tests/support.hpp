#pragma once

#include <random>
#include <vector>

#include "slicecalc/nash_cert.hpp"

namespace slicecalc::testing {

inline mpq_class random_rational(std::mt19937_64& rng, int num_max = 9, int den_max = 5) {
  std::uniform_int_distribution<int> num(-num_max, num_max), den(1, den_max);
  mpq_class q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline AlgebraElement random_element(AlgebraKind k, std::mt19937_64& rng, int num_max = 9) {
  std::vector<mpq_class> v;
  for (int i = 0; i < dim(k); ++i) v.push_back(random_rational(rng, num_max));
  return AlgebraElement::from_rationals(k, v);
}

inline AlgebraElement random_float_element(AlgebraKind k, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<double> v;
  for (int i = 0; i < dim(k); ++i) v.push_back(g(rng));
  return AlgebraElement::from_doubles(k, v);
}

inline ImaginaryUnit random_unit(AlgebraKind k, std::mt19937_64& rng, Mode m = Mode::Exact) {
  return random_imaginary_unit(k, rng(), m);
}

inline GPoly random_real_poly(std::mt19937_64& rng, int degree, int num_max = 5) {
  std::vector<GaussQ> c;
  for (int s = 0; s <= degree; ++s) c.emplace_back(random_rational(rng, num_max, 3));
  if (c.back().is_zero()) c.back() = GaussQ(1);
  return GPoly(c);
}

inline SlicePolynomial random_slice_poly(AlgebraKind k, std::mt19937_64& rng, int degree, int num_max = 5) {
  std::vector<AlgebraElement> c;
  for (int s = 0; s <= degree; ++s) c.push_back(random_element(k, rng, num_max));
  if (c.back().is_zero()) c.back() = AlgebraElement::one(k, Mode::Exact);
  return SlicePolynomial(k, c);
}

/// Leaves and combinators of the stem grammar with rational constants. Transcendental
/// leaves are included only on request.
inline StemExpr random_stem(AlgebraKind k, std::mt19937_64& rng, int depth, bool transcendental = false) {
  auto coeff = [&] { return ComplexifiedElement(random_element(k, rng, 4)); };
  std::uniform_int_distribution<int> pick_leaf(0, transcendental ? 6 : 5);
  if (depth <= 0) {
    switch (pick_leaf(rng)) {
      case 0: return StemExpr::constant(coeff());
      case 1: return StemExpr::mul(StemExpr::z(k), StemExpr::constant(coeff()));
      case 2: {
        std::uniform_int_distribution<int> c(1, 4);
        GPoly den({GaussQ(mpq_class(c(rng))), GaussQ(0), GaussQ(1)});
        return StemExpr::poly_ratio(random_real_poly(rng, 2), den, coeff());
      }
      case 3: return StemExpr::radical(1, 2, coeff());
      case 4: {
        std::uniform_int_distribution<int> p(1, 3);
        return StemExpr::poly_ratio(random_real_poly(rng, p(rng)), GPoly(GaussQ(1)), coeff());
      }
      case 5: return StemExpr::piecewise_sign(ComplexifiedElement(random_element(k, rng, 4), random_element(k, rng, 4)));
      default: {
        std::uniform_int_distribution<int> t(0, 2);
        const ScalarFnKind kinds[] = {ScalarFnKind::Exp, ScalarFnKind::Cos, ScalarFnKind::Sin};
        return StemExpr::transcendental(kinds[t(rng)], coeff());
      }
    }
  }
  std::uniform_int_distribution<int> pick(0, 3);
  switch (pick(rng)) {
    case 0: return StemExpr::add(random_stem(k, rng, depth - 1, transcendental), random_stem(k, rng, depth - 1, transcendental));
    case 1: return StemExpr::mul(random_stem(k, rng, depth - 1, transcendental), random_stem(k, rng, depth - 1, transcendental));
    case 2: return StemExpr::cinv(random_stem(k, rng, depth - 1, transcendental));
    default: return random_stem(k, rng, 0, transcendental);
  }
}

/// Float point α + βJ for a domain sample z = α + iβ.
inline AlgebraElement point_on(const ImaginaryUnit& J, Cplx z) {
  return phi(J, ComplexPoint::from_complex(z));
}

}  // namespace slicecalc::testing
