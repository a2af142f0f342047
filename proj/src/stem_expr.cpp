#include "slicecalc/stem_expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "slicecalc/error.hpp"

namespace slicecalc {

// ---------------------------------------------------------------- DomainSpec

DomainSpec DomainSpec::slit_plane() {
  DomainSpec d;
  d.slit_ = true;
  return d;
}

DomainSpec DomainSpec::upper_lower_pair() {
  DomainSpec d;
  d.off_real_ = true;
  return d;
}

DomainSpec DomainSpec::disk(double radius) {
  if (!(radius > 0)) throw Error(ErrorCode::InvalidArgument, "disk radius must be positive");
  DomainSpec d;
  d.radius_ = radius;
  return d;
}

DomainSpec DomainSpec::plane_minus_points(const std::vector<Cplx>& points) { return DomainSpec().minus_points(points); }

bool DomainSpec::contains(Cplx z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  if (off_real_ && z.imag() == 0.0) return false;
  if (slit_ && z.imag() == 0.0 && z.real() <= 0.0) return false;
  if (radius_ && std::abs(z) >= *radius_) return false;
  for (const auto& p : removed_)
    if (std::abs(z - p) <= 1e-9) return false;
  return true;
}

bool DomainSpec::contains(const ComplexPoint& z) const {
  if (z.mode() == Mode::Exact) {
    if (off_real_ && z.beta.is_zero()) return false;
    if (slit_ && z.beta.is_zero() && z.alpha.sign() <= 0) return false;
  }
  return contains(z.to_complex());
}

DomainSpec DomainSpec::intersect(const DomainSpec& o) const {
  DomainSpec d = *this;
  d.slit_ = slit_ || o.slit_;
  d.off_real_ = off_real_ || o.off_real_;
  if (o.radius_) d.radius_ = radius_ ? std::min(*radius_, *o.radius_) : *o.radius_;
  return d.minus_points(o.removed_);
}

DomainSpec DomainSpec::minus_points(const std::vector<Cplx>& points) const {
  DomainSpec d = *this;
  auto add = [&d](Cplx p) {
    for (const auto& q : d.removed_)
      if (std::abs(p - q) <= 1e-9) return;
    d.removed_.push_back(p);
  };
  for (const auto& p : points) {
    add(p);
    add(std::conj(p));
  }
  return d;
}

namespace {

double halton(std::uint64_t index, std::uint64_t base) {
  double f = 1, r = 0;
  while (index > 0) {
    f /= static_cast<double>(base);
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

}  // namespace

std::vector<Cplx> DomainSpec::sample(int n_per_component, std::uint64_t seed) const {
  double box = radius_ ? 0.95 * *radius_ / std::sqrt(2.0) : 2.5;
  double margin = std::min(0.05, 0.1 * box);
  auto acceptable = [&](Cplx z) {
    if (!contains(z)) return false;
    if ((slit_ || off_real_) && std::fabs(z.imag()) < margin) return false;
    for (const auto& p : removed_)
      if (std::abs(z - p) < margin) return false;
    return true;
  };
  std::vector<Cplx> out;
  std::uint64_t start = 1 + seed % 9973;
  for (int comp = 0; comp < component_count(); ++comp) {
    int got = 0;
    for (std::uint64_t i = start; got < n_per_component && i < start + 200000; ++i) {
      double a = (2 * halton(i, 2) - 1) * box;
      double b = (2 * halton(i, 3) - 1) * box;
      if (off_real_) b = (comp == 0 ? 1 : -1) * std::fabs(b);
      Cplx z(a, b);
      if (!acceptable(z)) continue;
      out.push_back(z);
      ++got;
    }
  }
  return out;
}

std::string DomainSpec::name() const {
  std::vector<std::string> parts;
  if (slit_) parts.emplace_back("slit");
  if (off_real_) parts.emplace_back("offreal");
  if (radius_) {
    std::ostringstream os;
    os.precision(17);
    os << "disk:" << *radius_;
    parts.push_back(os.str());
  }
  for (const auto& p : removed_) {
    std::ostringstream os;
    os.precision(17);
    os << "minus:" << p.real() << "," << p.imag();
    parts.push_back(os.str());
  }
  if (parts.empty()) return "full";
  std::string s = parts[0];
  for (std::size_t k = 1; k < parts.size(); ++k) s += "+" + parts[k];
  return s;
}

DomainSpec DomainSpec::parse(const std::string& text) {
  DomainSpec d;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, '+')) {
    if (tok == "full" || tok.empty()) continue;
    if (tok == "slit") d.slit_ = true;
    else if (tok == "offreal" || tok == "upperlower") d.off_real_ = true;
    else if (tok.rfind("disk:", 0) == 0) d = d.intersect(disk(std::stod(tok.substr(5))));
    else if (tok.rfind("minus:", 0) == 0) {
      std::string body = tok.substr(6);
      auto comma = body.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "minus:<re>,<im> expected");
      d = d.minus_points({Cplx(std::stod(body.substr(0, comma)), std::stod(body.substr(comma + 1)))});
    } else {
      throw Error(ErrorCode::ParseError, "unknown domain keyword '" + tok + "'");
    }
  }
  return d;
}

// ---------------------------------------------------------------- AST

const char* node_type_name(NodeType t) {
  switch (t) {
    case NodeType::Const: return "Const";
    case NodeType::Z: return "Z";
    case NodeType::Add: return "Add";
    case NodeType::Mul: return "Mul";
    case NodeType::CInv: return "CInv";
    case NodeType::ScalarFn: return "ScalarFn";
    case NodeType::PiecewiseSign: return "PiecewiseSign";
    case NodeType::Recip: return "Recip";
    case NodeType::ZBar: return "ZBar";
  }
  return "?";
}

const char* scalar_fn_name(ScalarFnKind k) {
  switch (k) {
    case ScalarFnKind::PolyRatio: return "ratio";
    case ScalarFnKind::Radical: return "rad";
    case ScalarFnKind::Exp: return "exp";
    case ScalarFnKind::Cos: return "cos";
    case ScalarFnKind::Sin: return "sin";
  }
  return "?";
}

namespace {

std::shared_ptr<StemNode> make_node(NodeType t, AlgebraKind k) {
  auto n = std::make_shared<StemNode>();
  n->type = t;
  n->kind = k;
  return n;
}

void require_same_kind(const StemExpr& a, const StemExpr& b) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::KindMismatch, "stem expressions of different kinds");
}

ComplexifiedElement gauss_times(const GaussQ& c, const ComplexifiedElement& w) {
  ComplexPoint s(Scalar(c.re), Scalar(c.im));
  return cx_scale(s.to_mode(w.mode()), w);
}

}  // namespace

StemExpr StemExpr::constant(const ComplexifiedElement& w) {
  auto n = make_node(NodeType::Const, w.kind());
  n->value = w;
  return StemExpr(n);
}

StemExpr StemExpr::z(AlgebraKind k) { return StemExpr(make_node(NodeType::Z, k)); }

StemExpr StemExpr::zbar(AlgebraKind k) { return StemExpr(make_node(NodeType::ZBar, k)); }

StemExpr StemExpr::add(StemExpr a, StemExpr b) {
  require_same_kind(a, b);
  auto n = make_node(NodeType::Add, a.kind());
  n->children = {std::move(a), std::move(b)};
  return StemExpr(n);
}

StemExpr StemExpr::mul(StemExpr a, StemExpr b) {
  require_same_kind(a, b);
  auto n = make_node(NodeType::Mul, a.kind());
  n->children = {std::move(a), std::move(b)};
  return StemExpr(n);
}

StemExpr StemExpr::cinv(StemExpr a) {
  auto n = make_node(NodeType::CInv, a.kind());
  n->children = {std::move(a)};
  return StemExpr(n);
}

StemExpr StemExpr::recip(StemExpr a) {
  auto n = make_node(NodeType::Recip, a.kind());
  n->children = {std::move(a)};
  return StemExpr(n);
}

StemExpr StemExpr::scalar_fn(ScalarFnSpec fn, const ComplexifiedElement& coeff) {
  auto n = make_node(NodeType::ScalarFn, coeff.kind());
  if (fn.kind == ScalarFnKind::Radical && (fn.q < 1 || std::gcd(std::abs(fn.p), fn.q) != 1))
    throw Error(ErrorCode::InvalidArgument, "radical exponent must be a reduced fraction with q >= 1");
  if (fn.kind == ScalarFnKind::PolyRatio && fn.den.is_zero_poly())
    throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  n->fn = std::move(fn);
  n->value = coeff;
  return StemExpr(n);
}

StemExpr StemExpr::piecewise_sign(const ComplexifiedElement& w_plus) {
  auto n = make_node(NodeType::PiecewiseSign, w_plus.kind());
  n->value = w_plus;
  return StemExpr(n);
}

StemExpr StemExpr::poly_ratio(const GPoly& num, const GPoly& den, const ComplexifiedElement& coeff) {
  if (den.is_zero_poly()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero_poly() || coeff.is_zero()) return constant(ComplexifiedElement::zero(coeff.kind(), coeff.mode()));
  GPoly g = gcd(num, den);
  GPoly n = divmod(num, g).first;
  GPoly d = divmod(den, g).first;
  GaussQ lc = d.lc();
  n = n.scaled(GaussQ(1) / lc);
  d = monic(d);
  if (d.degree() == 0 && n.degree() == 0) return constant(gauss_times(n.lc(), coeff));
  ScalarFnSpec fn;
  fn.kind = ScalarFnKind::PolyRatio;
  fn.num = n;
  fn.den = d;
  return scalar_fn(std::move(fn), coeff);
}

StemExpr StemExpr::radical(int p, int q, const ComplexifiedElement& coeff) {
  if (q == 0) throw Error(ErrorCode::DivisionByZero, "radical with zero denominator");
  if (q < 0) {
    p = -p;
    q = -q;
  }
  int g = std::gcd(std::abs(p), q);
  if (g == 0) g = 1;
  p /= g;
  q /= g;
  if (q == 1) {
    GPoly zp = GPoly::monomial(GaussQ(1), std::abs(p));
    return p >= 0 ? poly_ratio(zp, GPoly(GaussQ(1)), coeff) : poly_ratio(GPoly(GaussQ(1)), zp, coeff);
  }
  ScalarFnSpec fn;
  fn.kind = ScalarFnKind::Radical;
  fn.p = p;
  fn.q = q;
  return scalar_fn(std::move(fn), coeff);
}

StemExpr StemExpr::transcendental(ScalarFnKind kind, const ComplexifiedElement& coeff) {
  if (kind == ScalarFnKind::PolyRatio || kind == ScalarFnKind::Radical)
    throw Error(ErrorCode::InvalidArgument, "not a transcendental function kind");
  ScalarFnSpec fn;
  fn.kind = kind;
  return scalar_fn(std::move(fn), coeff);
}

NodeType StemExpr::type() const { return n_->type; }
AlgebraKind StemExpr::kind() const { return n_->kind; }

const StemExpr& StemExpr::lhs() const {
  if (n_->children.empty()) throw Error(ErrorCode::InvalidArgument, "node has no children");
  return n_->children[0];
}

const StemExpr& StemExpr::rhs() const {
  if (n_->children.size() < 2) throw Error(ErrorCode::InvalidArgument, "node has no right child");
  return n_->children[1];
}

const ComplexifiedElement& StemExpr::value() const {
  if (!n_->value) throw Error(ErrorCode::InvalidArgument, "node carries no constant");
  return *n_->value;
}

const ScalarFnSpec& StemExpr::fn() const { return n_->fn; }

bool StemExpr::is_zero_const() const { return n_->type == NodeType::Const && n_->value->is_zero(); }

StemExpr simp_add(const StemExpr& a, const StemExpr& b) {
  if (a.is_zero_const()) return b;
  if (b.is_zero_const()) return a;
  return StemExpr::add(a, b);
}

StemExpr simp_mul(const StemExpr& a, const StemExpr& b) {
  if (a.is_zero_const()) return a;
  if (b.is_zero_const()) return b;
  auto is_one = [](const StemExpr& e) {
    return e.type() == NodeType::Const && e.value().mode() == Mode::Exact &&
           e.value() == ComplexifiedElement::one(e.kind(), Mode::Exact);
  };
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  return StemExpr::mul(a, b);
}

StemExpr simp_neg(const StemExpr& a) {
  if (a.is_zero_const()) return a;
  if (a.type() == NodeType::Const) return StemExpr::constant(-a.value());
  return StemExpr::mul(StemExpr::constant(-ComplexifiedElement::one(a.kind(), Mode::Exact)), a);
}

bool structurally_equal(const StemExpr& a, const StemExpr& b) {
  if (a.id() == b.id()) return true;
  if (a.type() != b.type() || a.kind() != b.kind()) return false;
  const StemNode& x = *a.id();
  const StemNode& y = *b.id();
  if (x.value.has_value() != y.value.has_value()) return false;
  if (x.value && !(*x.value == *y.value)) return false;
  if (a.type() == NodeType::ScalarFn) {
    if (x.fn.kind != y.fn.kind || x.fn.p != y.fn.p || x.fn.q != y.fn.q || !(x.fn.num == y.fn.num) ||
        !(x.fn.den == y.fn.den))
      return false;
  }
  if (x.children.size() != y.children.size()) return false;
  for (std::size_t k = 0; k < x.children.size(); ++k)
    if (!structurally_equal(x.children[k], y.children[k])) return false;
  return true;
}

namespace {

template <class Pred>
bool any_node(const StemExpr& e, const Pred& pred) {
  if (pred(e)) return true;
  for (const auto& c : e.id()->children)
    if (any_node(c, pred)) return true;
  return false;
}

std::optional<std::string> find_unsupported_at(const StemExpr& e, const std::string& path) {
  std::string here = path.empty() ? std::string(node_type_name(e.type())) : path + "/" + node_type_name(e.type());
  if (e.type() == NodeType::ZBar) return here;
  if (e.type() == NodeType::ScalarFn) {
    ScalarFnKind k = e.fn().kind;
    if (k == ScalarFnKind::Exp || k == ScalarFnKind::Cos || k == ScalarFnKind::Sin)
      return here + "(" + scalar_fn_name(k) + ")";
  }
  const auto& ch = e.id()->children;
  for (std::size_t k = 0; k < ch.size(); ++k) {
    std::string step = here + (ch.size() == 2 ? (k == 0 ? ".lhs" : ".rhs") : "");
    if (auto r = find_unsupported_at(ch[k], step)) return r;
  }
  return std::nullopt;
}

}  // namespace

bool contains_node(const StemExpr& e, NodeType t) {
  return any_node(e, [t](const StemExpr& x) { return x.type() == t; });
}

bool contains_fn(const StemExpr& e, ScalarFnKind k) {
  return any_node(e, [k](const StemExpr& x) { return x.type() == NodeType::ScalarFn && x.fn().kind == k; });
}

std::optional<std::string> find_unsupported(const StemExpr& e) { return find_unsupported_at(e, ""); }

bool has_float_constants(const StemExpr& e) {
  return any_node(e, [](const StemExpr& x) { return x.id()->value && x.value().mode() == Mode::Float; });
}

DomainSpec natural_domain(const StemExpr& e) {
  DomainSpec d;
  if (contains_fn(e, ScalarFnKind::Radical)) d = d.intersect(DomainSpec::slit_plane());
  if (contains_node(e, NodeType::PiecewiseSign)) d = d.intersect(DomainSpec::upper_lower_pair());
  return d;
}

// ---------------------------------------------------------------- evaluation

namespace {

Scalar exact_root(const mpq_class& a, int q) {
  mpz_class n, d;
  bool ok_n = mpz_root(n.get_mpz_t(), a.get_num_mpz_t(), static_cast<unsigned long>(q)) != 0;
  bool ok_d = mpz_root(d.get_mpz_t(), a.get_den_mpz_t(), static_cast<unsigned long>(q)) != 0;
  if (!ok_n || !ok_d) throw Error(ErrorCode::InexactValue, "radical has no exact rational value here");
  return Scalar(mpq_class(n, d));
}

ComplexPoint cpow_int(const ComplexPoint& z, int k) {
  ComplexPoint r = ComplexPoint::one(z.mode());
  ComplexPoint b = k >= 0 ? z : ComplexPoint::one(z.mode()) / z;
  for (int i = 0; i < std::abs(k); ++i) r = r * b;
  return r;
}

}  // namespace

ComplexPoint scalar_fn_value(const ScalarFnSpec& fn, const ComplexPoint& z) {
  Mode m = z.mode();
  switch (fn.kind) {
    case ScalarFnKind::PolyRatio: {
      if (m == Mode::Exact) {
        GaussQ zz = z.to_gauss();
        GaussQ den = eval(fn.den, zz);
        if (den.is_zero()) throw Error(ErrorCode::OutsideDomain, "pole of a rational function");
        return ComplexPoint::from_gauss(eval(fn.num, zz) / den);
      }
      Cplx zz = z.to_complex();
      Cplx den = eval(fn.den, zz);
      if (den == 0.0) throw Error(ErrorCode::OutsideDomain, "pole of a rational function");
      return ComplexPoint::from_complex(eval(fn.num, zz) / den);
    }
    case ScalarFnKind::Radical: {
      if (z.beta.is_zero() && z.alpha.sign() <= 0)
        throw Error(ErrorCode::BranchUndefined, "radical evaluated on the branch cut");
      if (m == Mode::Exact) {
        if (!z.beta.is_zero()) throw Error(ErrorCode::InexactValue, "radical of a non-real exact point");
        Scalar r = exact_root(z.alpha.rational(), fn.q);
        return cpow_int(ComplexPoint(r, Scalar::zero(m)), fn.p);
      }
      Cplx zz = z.to_complex();
      return ComplexPoint::from_complex(std::exp(std::log(zz) * (static_cast<double>(fn.p) / fn.q)));
    }
    case ScalarFnKind::Exp:
    case ScalarFnKind::Cos:
    case ScalarFnKind::Sin: {
      if (m == Mode::Exact) throw Error(ErrorCode::InexactValue, "transcendental function in exact mode");
      Cplx zz = z.to_complex();
      Cplx v = fn.kind == ScalarFnKind::Exp ? std::exp(zz) : fn.kind == ScalarFnKind::Cos ? std::cos(zz) : std::sin(zz);
      return ComplexPoint::from_complex(v);
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown scalar function");
}

namespace {

class Evaluator {
 public:
  Evaluator(const ComplexPoint& z, AlgebraKind k) : z_(z), kind_(k), mode_(z.mode()) {}

  ComplexifiedElement eval(const StemExpr& e) {
    auto it = memo_.find(e.id());
    if (it != memo_.end()) return it->second;
    ComplexifiedElement v = compute(e);
    memo_.emplace(e.id(), v);
    return v;
  }

 private:
  ComplexifiedElement lift(const ComplexifiedElement& w) const {
    if (w.mode() == Mode::Float && mode_ == Mode::Exact)
      throw Error(ErrorCode::ModeMismatch, "float constant evaluated at an exact point");
    return w.to_mode(mode_);
  }

  ComplexifiedElement compute(const StemExpr& e) {
    switch (e.type()) {
      case NodeType::Const: return lift(e.value());
      case NodeType::Z: return ComplexifiedElement::scalar(kind_, z_);
      case NodeType::ZBar: return ComplexifiedElement::scalar(kind_, z_.conj());
      case NodeType::Add: return eval(e.lhs()) + eval(e.rhs());
      case NodeType::Mul: return cx_mul(eval(e.lhs()), eval(e.rhs()));
      case NodeType::CInv: return cx_cinv(eval(e.child()));
      case NodeType::ScalarFn: return cx_scale(scalar_fn_value(e.fn(), z_), lift(e.value()));
      case NodeType::PiecewiseSign: {
        int s = z_.beta.sign();
        if (s == 0) throw Error(ErrorCode::OutsideDomain, "piecewise stem evaluated on the real axis");
        ComplexifiedElement w = lift(e.value());
        return s > 0 ? w : cx_bar(w);
      }
      case NodeType::Recip: {
        ComplexifiedElement w = eval(e.child());
        ComplexPoint c = w.center_part();
        bool central = mode_ == Mode::Exact ? (w.x().im().is_zero() && w.y().im().is_zero())
                                            : (w.x().im().abs() + w.y().im().abs() <= 1e-8 * (1 + w.abs()));
        if (!central) throw Error(ErrorCode::InvalidArgument, "reciprocal of a non-central stem value");
        if (c.is_zero()) throw Error(ErrorCode::DivisionByZero, "reciprocal of zero");
        return ComplexifiedElement::scalar(kind_, ComplexPoint::one(mode_) / c);
      }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown node");
  }

  ComplexPoint z_;
  AlgebraKind kind_;
  Mode mode_;
  std::unordered_map<const StemNode*, ComplexifiedElement> memo_;
};

}  // namespace

ComplexifiedElement stem_eval(const StemExpr& F, const ComplexPoint& z, const DomainSpec& D) {
  if (z.alpha.mode() != z.beta.mode()) throw Error(ErrorCode::ModeMismatch, "point mixes exact and float parts");
  if (!D.contains(z)) throw Error(ErrorCode::OutsideDomain, "point " + z.to_string() + " is outside " + D.name());
  Evaluator ev(z, F.kind());
  return ev.eval(F);
}

ComplexifiedElement stem_eval(const StemExpr& F, Cplx z, const DomainSpec& D) {
  return stem_eval(F, ComplexPoint::from_complex(z), D);
}

Cplx component_eval(const ComplexComponentExpr& e, Cplx z, const DomainSpec& D) {
  return stem_eval(e, z, D).center_part().to_complex();
}

CheckReport check_stemness(const StemExpr& F, const DomainSpec& D, int n_samples, std::uint64_t seed) {
  CheckReport r;
  for (Cplx z : D.sample(n_samples, seed)) {
    if (!D.contains(std::conj(z))) continue;
    ComplexifiedElement a = cx_bar(stem_eval(F, z, D));
    ComplexifiedElement b = stem_eval(F, std::conj(z), D);
    r.max_residual = std::max(r.max_residual, cx_distance(a, b) / (1 + a.abs()));
    ++r.samples;
  }
  r.passed = r.max_residual <= 1e-9;
  return r;
}

CheckReport check_holomorphy(const StemExpr& F, const DomainSpec& D, int n_samples, double h, std::uint64_t seed) {
  CheckReport r;
  for (Cplx z : D.sample(n_samples, seed)) {
    Cplx steps[4] = {z + h, z - h, z + Cplx(0, h), z - Cplx(0, h)};
    bool inside = true;
    for (Cplx s : steps) inside = inside && D.contains(s);
    if (!inside) continue;
    ComplexifiedElement da = stem_eval(F, steps[0], D) - stem_eval(F, steps[1], D);
    ComplexifiedElement db = stem_eval(F, steps[2], D) - stem_eval(F, steps[3], D);
    // ½(∂α + ι∂β): ι(x + ιy) = −y + ιx
    ComplexifiedElement iota_db(-db.y(), db.x());
    ComplexifiedElement dbar = da + iota_db;
    double scale = 1 + stem_eval(F, z, D).abs();
    double res = dbar.abs() / (4 * h);
    r.max_residual = std::max(r.max_residual, res / scale);
    ++r.samples;
  }
  r.passed = r.max_residual <= 1e-6;
  return r;
}

// ---------------------------------------------------------------- derivative

StemExpr stem_derivative(const StemExpr& F) {
  std::unordered_map<const StemNode*, StemExpr> memo;
  AlgebraKind k = F.kind();
  auto zero = StemExpr::zero(k);
  std::function<StemExpr(const StemExpr&)> d = [&](const StemExpr& e) -> StemExpr {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;
    StemExpr out = zero;
    switch (e.type()) {
      case NodeType::Const:
      case NodeType::PiecewiseSign:
      case NodeType::ZBar: out = zero; break;
      case NodeType::Z: out = StemExpr::one(k); break;
      case NodeType::Add: out = simp_add(d(e.lhs()), d(e.rhs())); break;
      case NodeType::Mul:
        out = simp_add(simp_mul(d(e.lhs()), e.rhs()), simp_mul(e.lhs(), d(e.rhs())));
        break;
      case NodeType::CInv: {
        StemExpr c = d(e.child());
        out = c.is_zero_const() ? zero : StemExpr::cinv(c);
        break;
      }
      case NodeType::Recip: {
        StemExpr c = d(e.child());
        out = c.is_zero_const() ? zero : simp_neg(simp_mul(simp_mul(c, e), e));
        break;
      }
      case NodeType::ScalarFn: {
        const ScalarFnSpec& fn = e.fn();
        const ComplexifiedElement& w = e.value();
        switch (fn.kind) {
          case ScalarFnKind::PolyRatio: {
            GPoly num = fn.num.derivative() * fn.den - fn.num * fn.den.derivative();
            out = StemExpr::poly_ratio(num, fn.den * fn.den, w);
            break;
          }
          case ScalarFnKind::Radical: {
            GaussQ c(mpq_class(fn.p, fn.q));
            c.re.canonicalize();
            out = StemExpr::radical(fn.p - fn.q, fn.q, gauss_times(c, w));
            break;
          }
          case ScalarFnKind::Exp: out = StemExpr::transcendental(ScalarFnKind::Exp, w); break;
          case ScalarFnKind::Cos: out = StemExpr::transcendental(ScalarFnKind::Sin, -w); break;
          case ScalarFnKind::Sin: out = StemExpr::transcendental(ScalarFnKind::Cos, w); break;
        }
        break;
      }
    }
    memo.emplace(e.id(), out);
    return out;
  };
  return d(F);
}

// ---------------------------------------------------------------- components

namespace {

ComplexifiedElement real_kind_value(const Scalar& x, const Scalar& y) {
  return {AlgebraElement(AlgebraKind::R, {x}), AlgebraElement(AlgebraKind::R, {y})};
}

std::vector<ComplexifiedElement> split_constant(const ComplexifiedElement& w, const SplittingBase& base) {
  std::vector<Scalar> xs = base.coordinates(w.x());
  std::vector<Scalar> ys = base.coordinates(w.y());
  std::vector<ComplexifiedElement> out;
  for (std::size_t l = 0; l < xs.size(); ++l) out.push_back(real_kind_value(xs[l], ys[l]));
  return out;
}

StemExpr real_scaled(const Scalar& g, const StemExpr& e) {
  if (g.is_zero() || e.is_zero_const()) return StemExpr::zero(AlgebraKind::R);
  if (g == Scalar::one(g.mode())) return e;
  if (g == -Scalar::one(g.mode())) return simp_neg(e);
  return simp_mul(StemExpr::constant(real_kind_value(g, Scalar::zero(g.mode()))), e);
}

}  // namespace

std::vector<ComplexComponentExpr> stem_components(const StemExpr& F, const SplittingBase& base) {
  if (F.kind() != base.kind()) throw Error(ErrorCode::KindMismatch, "stem and base kinds differ");
  const std::size_t n = static_cast<std::size_t>(dim(base.kind()));
  const AlgebraKind R = AlgebraKind::R;
  using Comps = std::vector<StemExpr>;
  std::unordered_map<const StemNode*, Comps> memo;
  std::function<Comps(const StemExpr&)> go = [&](const StemExpr& e) -> Comps {
    auto it = memo.find(e.id());
    if (it != memo.end()) return it->second;
    Comps out(n, StemExpr::zero(R));
    switch (e.type()) {
      case NodeType::Const: {
        auto parts = split_constant(e.value(), base);
        for (std::size_t l = 0; l < n; ++l)
          if (!parts[l].is_zero()) out[l] = StemExpr::constant(parts[l]);
        break;
      }
      case NodeType::Z: out[0] = StemExpr::z(R); break;
      case NodeType::ZBar: out[0] = StemExpr::zbar(R); break;
      case NodeType::Add: {
        Comps a = go(e.lhs()), b = go(e.rhs());
        for (std::size_t l = 0; l < n; ++l) out[l] = simp_add(a[l], b[l]);
        break;
      }
      case NodeType::Mul: {
        Comps a = go(e.lhs()), b = go(e.rhs());
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i].is_zero_const()) continue;
          for (std::size_t j = 0; j < n; ++j) {
            if (b[j].is_zero_const()) continue;
            StemExpr prod = simp_mul(a[i], b[j]);
            const auto& g = base.structure(static_cast<int>(i), static_cast<int>(j));
            for (std::size_t c = 0; c < n; ++c)
              if (!g[c].is_zero()) out[c] = simp_add(out[c], real_scaled(g[c], prod));
          }
        }
        break;
      }
      case NodeType::CInv: {
        Comps a = go(e.child());
        for (std::size_t l = 0; l < n; ++l) {
          if (a[l].is_zero_const()) continue;
          const auto& g = base.conj_coords(static_cast<int>(l));
          for (std::size_t m = 0; m < n; ++m)
            if (!g[m].is_zero()) out[m] = simp_add(out[m], real_scaled(g[m], a[l]));
        }
        break;
      }
      case NodeType::ScalarFn: {
        auto parts = split_constant(e.value(), base);
        for (std::size_t l = 0; l < n; ++l)
          if (!parts[l].is_zero()) out[l] = StemExpr::scalar_fn(e.fn(), parts[l]);
        break;
      }
      case NodeType::PiecewiseSign: {
        auto parts = split_constant(e.value(), base);
        for (std::size_t l = 0; l < n; ++l)
          if (!parts[l].is_zero()) out[l] = StemExpr::piecewise_sign(parts[l]);
        break;
      }
      case NodeType::Recip: out[0] = StemExpr::recip(go(e.child())[0]); break;
    }
    memo.emplace(e.id(), out);
    return out;
  };
  return go(F);
}

}  // namespace slicecalc
