#pragma once

#include <optional>
#include <vector>

#include "slicecalc/stem_expr.hpp"

namespace slicecalc {

/// Slice function induced by a stem on the circular set over `domain`.
class SliceFunction {
 public:
  SliceFunction(StemExpr stem, DomainSpec domain) : stem_(std::move(stem)), domain_(std::move(domain)) {}
  /// Domain from the branch nodes, minus the poles of rational scalar functions.
  static SliceFunction from_stem(StemExpr stem);
  static SliceFunction constant(const AlgebraElement& a);
  static SliceFunction identity(AlgebraKind k) { return from_stem(StemExpr::z(k)); }

  const StemExpr& stem() const { return stem_; }
  const DomainSpec& domain() const { return domain_; }
  AlgebraKind kind() const { return stem_.kind(); }

 private:
  StemExpr stem_;
  DomainSpec domain_;
};

/// x = α + βI with β ≥ 0; I is absent when x is real.
struct PointDecomposition {
  Scalar alpha;
  Scalar beta;
  std::optional<ImaginaryUnit> I;
};
PointDecomposition decompose_point(const AlgebraElement& x);

struct SphereZero {
  Scalar alpha;
  Scalar beta;
};

struct ZeroSet {
  std::vector<Scalar> real_zeros;
  std::vector<AlgebraElement> isolated_zeros;
  std::vector<SphereZero> spherical_zeros;
  std::optional<ImaginaryUnit> exceptional_half_slice;

  std::size_t count() const { return real_zeros.size() + isolated_zeros.size() + spherical_zeros.size(); }
};

AlgebraElement slice_eval(const SliceFunction& f, const AlgebraElement& x);
/// ½(a + b) − (J/2)(I(a − b)) with a = f(α + βI), b = f(α − βI).
AlgebraElement representation_check(const SliceFunction& f, const ImaginaryUnit& I, const ImaginaryUnit& J,
                                    const Scalar& alpha, const Scalar& beta);

SliceFunction slice_sum(const SliceFunction& f, const SliceFunction& g);
SliceFunction slice_product(const SliceFunction& f, const SliceFunction& g);
SliceFunction slice_conjugate(const SliceFunction& f);
SliceFunction normal(const SliceFunction& f);
/// N(f)^{-1}·f^c on the domain punctured at the zeros of the normal function.
SliceFunction reciprocal(const SliceFunction& f);
SliceFunction slice_derivative(const SliceFunction& f);

/// f_k = F^{2k} + ι·F^{2k+1}, k = 0..u_A, as complex expressions of z (the ℂ_I picture).
std::vector<ComplexComponentExpr> splitting_components(const SliceFunction& f, const SplittingBase& base);
/// Numeric f_k(z) read off slice_eval(f, φ_I(z)) in the base; independent of the symbolic components.
std::vector<Cplx> splitting_values(const SliceFunction& f, const SplittingBase& base, Cplx z);

bool is_slice_preserving(const SliceFunction& f, int n_samples = 64);
bool is_slice_regular(const SliceFunction& f, int n_samples = 64);

/// Zero set of a function whose stem is a slice polynomial, or of a piecewise-constant
/// stem with vanishing normal function (exceptional half slice).
ZeroSet poly_zero_set(const SliceFunction& f);

}  // namespace slicecalc
