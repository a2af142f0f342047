#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "slicecalc/complexified.hpp"
#include "slicecalc/upoly.hpp"

namespace slicecalc {

/// Planar domain D, always symmetric about the real axis.
class DomainSpec {
 public:
  static DomainSpec full_plane() { return {}; }
  /// ℂ minus the closed negative real half-line.
  static DomainSpec slit_plane();
  /// ℂ∖ℝ, two connected components.
  static DomainSpec upper_lower_pair();
  static DomainSpec disk(double radius);
  static DomainSpec plane_minus_points(const std::vector<Cplx>& points);

  bool slit() const { return slit_; }
  bool off_real() const { return off_real_; }
  const std::optional<double>& radius() const { return radius_; }
  const std::vector<Cplx>& removed() const { return removed_; }

  bool contains(const ComplexPoint& z) const;
  bool contains(Cplx z) const;
  DomainSpec intersect(const DomainSpec& o) const;
  /// Removes the points and their conjugates.
  DomainSpec minus_points(const std::vector<Cplx>& points) const;
  /// 2 for product domains (no real points), 1 otherwise.
  int component_count() const { return off_real_ ? 2 : 1; }
  /// Deterministic Halton points, n per connected component, kept away from the boundary.
  std::vector<Cplx> sample(int n_per_component, std::uint64_t seed) const;

  std::string name() const;
  static DomainSpec parse(const std::string& text);

 private:
  bool slit_ = false;
  bool off_real_ = false;
  std::optional<double> radius_;
  std::vector<Cplx> removed_;
};

enum class NodeType { Const, Z, Add, Mul, CInv, ScalarFn, PiecewiseSign, Recip, ZBar };
enum class ScalarFnKind { PolyRatio, Radical, Exp, Cos, Sin };

const char* node_type_name(NodeType t);
const char* scalar_fn_name(ScalarFnKind k);

struct ScalarFnSpec {
  ScalarFnKind kind = ScalarFnKind::PolyRatio;
  GPoly num;
  GPoly den;
  int p = 1;
  int q = 1;
};

struct StemNode;

/// Immutable expression tree for a stem function D → A⊗ℂ; subtrees are shared.
class StemExpr {
 public:
  static StemExpr constant(const ComplexifiedElement& w);
  static StemExpr constant(const AlgebraElement& a) { return constant(ComplexifiedElement(a)); }
  static StemExpr zero(AlgebraKind k) { return constant(ComplexifiedElement::zero(k, Mode::Exact)); }
  static StemExpr one(AlgebraKind k) { return constant(ComplexifiedElement::one(k, Mode::Exact)); }
  static StemExpr z(AlgebraKind k);
  static StemExpr zbar(AlgebraKind k);
  static StemExpr add(StemExpr a, StemExpr b);
  static StemExpr mul(StemExpr a, StemExpr b);
  static StemExpr cinv(StemExpr a);
  /// Reciprocal of a stem whose values are central (in ℝ⊗ℂ).
  static StemExpr recip(StemExpr a);
  static StemExpr scalar_fn(ScalarFnSpec fn, const ComplexifiedElement& coeff);
  static StemExpr piecewise_sign(const ComplexifiedElement& w_plus);

  /// num(z)/den(z)·coeff, reduced to lowest terms with monic denominator.
  static StemExpr poly_ratio(const GPoly& num, const GPoly& den, const ComplexifiedElement& coeff);
  /// z^{p/q}·coeff on the principal branch; q = 1 collapses to a rational power.
  static StemExpr radical(int p, int q, const ComplexifiedElement& coeff);
  static StemExpr transcendental(ScalarFnKind kind, const ComplexifiedElement& coeff);

  NodeType type() const;
  AlgebraKind kind() const;
  const StemExpr& lhs() const;
  const StemExpr& rhs() const;
  const StemExpr& child() const { return lhs(); }
  /// Payload of Const, ScalarFn (its coefficient) and PiecewiseSign nodes.
  const ComplexifiedElement& value() const;
  const ScalarFnSpec& fn() const;
  const StemNode* id() const { return n_.get(); }
  bool is_zero_const() const;

 private:
  explicit StemExpr(std::shared_ptr<const StemNode> n) : n_(std::move(n)) {}
  std::shared_ptr<const StemNode> n_;
};

struct StemNode {
  NodeType type;
  AlgebraKind kind;
  std::vector<StemExpr> children;
  std::optional<ComplexifiedElement> value;
  ScalarFnSpec fn;
};

/// Zero-aware builders used by every symbolic transformation.
StemExpr simp_add(const StemExpr& a, const StemExpr& b);
StemExpr simp_mul(const StemExpr& a, const StemExpr& b);
StemExpr simp_neg(const StemExpr& a);

bool structurally_equal(const StemExpr& a, const StemExpr& b);
bool contains_node(const StemExpr& e, NodeType t);
bool contains_fn(const StemExpr& e, ScalarFnKind k);
/// Path to the first Exp/Cos/Sin/ZBar node, if any.
std::optional<std::string> find_unsupported(const StemExpr& e);
/// True when some constant is stored in Float mode.
bool has_float_constants(const StemExpr& e);
/// Domain implied by the branch nodes: slit for radicals, off-real for piecewise signs.
DomainSpec natural_domain(const StemExpr& e);

ComplexifiedElement stem_eval(const StemExpr& F, const ComplexPoint& z, const DomainSpec& D);
/// Float evaluation convenience.
ComplexifiedElement stem_eval(const StemExpr& F, Cplx z, const DomainSpec& D);
/// Value of a scalar function node at z (without its coefficient).
ComplexPoint scalar_fn_value(const ScalarFnSpec& fn, const ComplexPoint& z);

struct CheckReport {
  double max_residual = 0;
  int samples = 0;
  bool passed = false;
};

/// ‖bar(F(z)) − F(z̄)‖ relative to 1 + ‖F(z)‖; tolerance 1e−9.
CheckReport check_stemness(const StemExpr& F, const DomainSpec& D, int n_samples, std::uint64_t seed = 1);
/// Central differences for ½(∂F/∂α + ι∂F/∂β); tolerance 1e−6·(1 + ‖F‖).
CheckReport check_holomorphy(const StemExpr& F, const DomainSpec& D, int n_samples, double h = 1e-5,
                             std::uint64_t seed = 1);

StemExpr stem_derivative(const StemExpr& F);

class SplittingBase;
/// F = Σ_ℓ F^ℓ e_ℓ over the full basis; each F^ℓ is a kind-R expression with values in ℂ.
using ComplexComponentExpr = StemExpr;
std::vector<ComplexComponentExpr> stem_components(const StemExpr& F, const SplittingBase& base);
/// Complex value of a kind-R expression.
Cplx component_eval(const ComplexComponentExpr& e, Cplx z, const DomainSpec& D);

}  // namespace slicecalc
