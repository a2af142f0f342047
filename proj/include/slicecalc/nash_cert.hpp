#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slicecalc/slice_poly.hpp"

namespace slicecalc {

/// Σ_j α_j(z₁)·z₂ʲ; the outer variable is z₂.
using BiPoly = UPoly<GPoly>;

inline constexpr int kDegreeCap = 64;
inline constexpr double kCertTol = 1e-8;

/// Nonzero A(z₁, z₂) with A(z, e(z)) = 0, square-free in z₂, primitive over ℚ(i)[z₁],
/// scaled so the leading coefficient of the top α is 1.
class AnnihilatorPoly {
 public:
  explicit AnnihilatorPoly(BiPoly a);

  const BiPoly& poly() const { return a_; }
  int deg_z2() const { return a_.degree(); }
  int deg_z1() const;
  GPoly alpha(int j) const { return a_.coeff(j); }
  std::map<std::pair<int, int>, GaussQ> coeffs() const;
  /// A(z₁, z₂) divided by its largest coefficient modulus.
  Cplx eval_scaled(Cplx z1, Cplx z2) const;
  std::string to_string() const;

  friend bool operator==(const AnnihilatorPoly& a, const AnnihilatorPoly& b) { return a.a_ == b.a_; }

 private:
  BiPoly a_;
  double scale_ = 1;
};

/// Square-free in z₂, primitive, monic top coefficient; throws DegreeCapExceeded and ZeroResultant.
AnnihilatorPoly normalize_annihilator(const BiPoly& a);

/// Closed-form route: Res_t(P(t, z₂), t^Q − z₁) built from the algebraic form of e.
AnnihilatorPoly annihilator(const ComplexComponentExpr& e);
/// Node-by-node elimination; slower, used as an independent check of annihilator().
AnnihilatorPoly annihilator_recursive(const ComplexComponentExpr& e);

BiPoly ann_const(const GaussQ& c);
BiPoly ann_z();
BiPoly ann_poly_ratio(const GPoly& num, const GPoly& den);
BiPoly ann_radical(int p, int q);
BiPoly ann_sign(const GaussQ& w);
BiPoly ann_add(const BiPoly& a, const BiPoly& b);
BiPoly ann_mul(const BiPoly& a, const BiPoly& b);
BiPoly ann_scale(const BiPoly& a, const GaussQ& c);
BiPoly ann_recip(const BiPoly& a);
/// Annihilator of conj(f(z̄)) from one of f.
BiPoly ann_conj(const BiPoly& a);

BiPoly bipoly_content_free(const BiPoly& a);
BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b);

using ComplexEvaluator = std::function<Cplx(Cplx)>;

/// max |A(z, e(z))| / ((1+|z|)^deg₁ (1+|e|)^deg₂) over seeded samples of D.
double annihilator_residual(const AnnihilatorPoly& A, const ComplexEvaluator& e, const DomainSpec& D, int n_samples,
                            std::uint64_t seed = 11);

enum class CertStatus { Certified, UnsupportedNode, ResidualFailure };
const char* cert_status_name(CertStatus s);

struct NashCertificate {
  SplittingBase base;
  std::vector<AnnihilatorPoly> per_component;
  std::vector<ComplexComponentExpr> components;
  std::vector<double> residuals;
  double max_residual = 0;
  CertStatus status = CertStatus::Certified;
  std::string detail;
};

/// Throws NotSliceRegular when the stem fails the Cauchy-Riemann check.
NashCertificate certify_slice_nash(const SliceFunction& f, const SplittingBase& base, int n_samples = 64);

/// Roots of Q(z₁, 0) where A = z₂ᵏ·Q.
std::vector<ComplexPoint> zero_locus_bound(const AnnihilatorPoly& A);

enum class SingularityKind { Removable, Pole };
const char* singularity_name(SingularityKind k);
/// Leading-coefficient test, confirmed by radial growth when an evaluator is supplied.
SingularityKind classify_singularity(const AnnihilatorPoly& A, const ComplexPoint& z0,
                                     const ComplexEvaluator& f = nullptr);

struct BoundCertificate {
  double C = 1;
  int m = 0;
  double R = 1;
};

BoundCertificate poly_bound_at_infinity(const AnnihilatorPoly& A);

struct BoundCheck {
  bool passed = false;
  /// min over samples of 1 − |f| / (C(1+|z|^m)).
  double margin = 0;
  int samples = 0;
};

/// 256 points with |z| log-uniform in [R, 100R].
BoundCheck validate_bound(const BoundCertificate& b, const ComplexEvaluator& f, const DomainSpec& D,
                          std::uint64_t seed = 5, int n_samples = 256);

BoundCertificate slice_poly_bound(const SliceFunction& f, const NashCertificate& cert);
/// Same sampling on ‖f(x)‖ at points x = α + βJ with random units J.
BoundCheck validate_slice_bound(const BoundCertificate& b, const SliceFunction& f, std::uint64_t seed = 5,
                                int n_samples = 256);

struct RationalSliceFn {
  SlicePolynomial P;
  SlicePolynomial Q;
  double residual = 0;
};

/// f = Q^{-•}·P with Q real and monic; Q = 1 for slice polynomials.
RationalSliceFn reconstruct_rational(const SliceFunction& f, const SplittingBase& base, std::uint64_t seed = 3);

/// α + βS: a real point when β = 0, a sphere otherwise.
struct SemiregularResult {
  NashCertificate certificate;
  std::vector<ComplexPoint> kept_poles;
  std::vector<ComplexPoint> removed;
};

SemiregularResult certify_semiregular_nash(const SliceFunction& f, const SplittingBase& base,
                                           const std::vector<ComplexPoint>& singular);

}  // namespace slicecalc
