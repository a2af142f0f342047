#include "slicecalc/nash_cert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "slicecalc/algebraic_form.hpp"
#include "slicecalc/error.hpp"

namespace slicecalc {

namespace {

using TPoly = UPoly<BiPoly>;

GPoly z1_poly() { return GPoly(std::vector<GaussQ>{GaussQ(0), GaussQ(1)}); }

GPoly content(const BiPoly& a) {
  GPoly g;
  for (const auto& c : a.coeffs()) {
    g = g.is_zero_poly() ? monic(c) : gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly primitive(const BiPoly& a) {
  if (a.is_zero_poly()) return a;
  GPoly c = content(a);
  return c.degree() == 0 ? a : exact_div_scalar(a, c);
}

BiPoly squarefree_z2(const BiPoly& a) {
  BiPoly p = primitive(a);
  if (p.degree() < 1) return p;
  BiPoly g = bipoly_gcd(p, p.derivative());
  if (g.degree() >= 1) p = primitive(exact_div(p, g));
  return p;
}

double max_coeff_abs(const BiPoly& a) {
  double m = 0;
  for (const auto& c : a.coeffs())
    for (const auto& x : c.coeffs()) m = std::max(m, std::abs(x.to_complex()));
  return m;
}

BiPoly z2_minus(const GPoly& c) { return BiPoly(std::vector<GPoly>{-c, GPoly(GaussQ(1))}); }

// Res_t(P, t^Q − z₁) up to sign: the norm of P in ℚ(i)[z₁, z₂][t]/(t^Q − z₁), computed as the
// determinant of multiplication by P on the basis 1, t, …, t^{Q−1}.
BiPoly norm_over_radical(const TPoly& P, int Q) {
  const auto q = static_cast<std::size_t>(Q);
  std::vector<BiPoly> red(q);
  for (int k = 0; k <= P.degree(); ++k) {
    BiPoly c = P.coeff(k);
    if (c.is_zero_poly()) continue;
    red[static_cast<std::size_t>(k % Q)] += c.scaled(GPoly::monomial(GaussQ(1), k / Q));
  }
  std::vector<std::vector<BiPoly>> M(q, std::vector<BiPoly>(q));
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t r = 0; r < q; ++r) M[(r + j) % q][j] = r + j >= q ? red[r].scaled(z1_poly()) : red[r];
  // Expansion over column subsets: D[mask] is the minor on the first |mask| rows.
  std::vector<BiPoly> D(std::size_t{1} << q);
  D[0] = BiPoly(GPoly(GaussQ(1)));
  for (std::size_t mask = 1; mask < D.size(); ++mask) {
    const auto row = static_cast<std::size_t>(std::popcount(mask)) - 1;
    BiPoly acc;
    for (std::size_t c = 0; c < q; ++c) {
      if (!(mask & (std::size_t{1} << c)) || M[row][c].is_zero_poly()) continue;
      const BiPoly& minor = D[mask & ~(std::size_t{1} << c)];
      if (minor.is_zero_poly()) continue;
      BiPoly term = M[row][c] * minor;
      if (std::popcount(mask >> (c + 1)) % 2 == 1) acc -= term;
      else acc += term;
    }
    D[mask] = std::move(acc);
  }
  BiPoly r = D.back();
  if (r.is_zero_poly()) throw Error(ErrorCode::ZeroResultant, "elimination produced the zero polynomial");
  return r;
}

// A(z₁, t) with the value variable renamed to t.
TPoly value_as_t(const BiPoly& a) {
  std::vector<BiPoly> c;
  for (const auto& alpha : a.coeffs()) c.emplace_back(alpha);
  return TPoly(std::move(c));
}

int z1_degree(const BiPoly& a) {
  int d = 0;
  for (const auto& c : a.coeffs()) d = std::max(d, c.degree());
  return d;
}

GaussQ eval2(const BiPoly& a, const GaussQ& z1, const GaussQ& z2) {
  GaussQ acc;
  for (std::size_t k = a.coeffs().size(); k-- > 0;) acc = acc * z2 + eval(a.coeffs()[k], z1);
  return acc;
}

GaussQ determinant(std::vector<std::vector<GaussQ>> m) {
  const std::size_t n = m.size();
  GaussQ det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return GaussQ();
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    GaussQ inv = GaussQ(1) / m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero()) continue;
      GaussQ f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

// Sylvester determinant with the formal t-degrees of a and b, so vanishing leading
// coefficients at a sample point do not change the specialization.
GaussQ sylvester_at(const TPoly& a, const TPoly& b, const GaussQ& z1, const GaussQ& z2) {
  const int n = a.degree(), m = b.degree();
  const auto size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<GaussQ>> S(size, std::vector<GaussQ>(size));
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + n - k)] = eval2(a.coeff(k), z1, z2);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k)
      S[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + m - k)] = eval2(b.coeff(k), z1, z2);
  return determinant(std::move(S));
}

// Newton interpolation through (i, vals[i]) for i = 0, 1, ….
GPoly interpolate(std::vector<GaussQ> vals) {
  const std::size_t n = vals.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) vals[i] = (vals[i] - vals[i - 1]) / GaussQ(mpq_class(static_cast<long>(j)));
  GPoly out;
  for (std::size_t k = n; k-- > 0;) out = out * GPoly(std::vector<GaussQ>{GaussQ(mpq_class(-static_cast<long>(k))), GaussQ(1)}) + GPoly(vals[k]);
  return out;
}

// Res_t(a, b) by evaluation at an integer grid in (z₁, z₂) and interpolation; the grid
// size comes from the degree bounds read off the Sylvester matrix.
BiPoly eliminate(const TPoly& a, const TPoly& b) {
  const int n = a.degree(), m = b.degree();
  int da1 = 0, da2 = 0, db1 = 0, db2 = 0;
  for (const auto& c : a.coeffs()) da1 = std::max(da1, z1_degree(c)), da2 = std::max(da2, c.degree());
  for (const auto& c : b.coeffs()) db1 = std::max(db1, z1_degree(c)), db2 = std::max(db2, c.degree());
  const int D1 = m * da1 + n * db1, D2 = m * da2 + n * db2;
  if (D2 > kDegreeCap) throw Error(ErrorCode::DegreeCapExceeded, "elimination degree in z2 exceeds the cap");
  std::vector<GPoly> rows;
  for (int y = 0; y <= D2; ++y) {
    std::vector<GaussQ> vals;
    for (int x = 0; x <= D1; ++x) vals.push_back(sylvester_at(a, b, GaussQ(mpq_class(x)), GaussQ(mpq_class(y))));
    rows.push_back(interpolate(std::move(vals)));
  }
  std::vector<GPoly> coeffs(static_cast<std::size_t>(D2) + 1);
  for (int i = 0; i <= D1; ++i) {
    std::vector<GaussQ> vals;
    for (const auto& r : rows) vals.push_back(r.coeff(i));
    GPoly col = interpolate(std::move(vals));
    for (int j = 0; j <= col.degree(); ++j)
      coeffs[static_cast<std::size_t>(j)] += GPoly::monomial(col.coeff(j), i);
  }
  BiPoly r(std::move(coeffs));
  if (r.is_zero_poly()) throw Error(ErrorCode::ZeroResultant, "elimination produced the zero polynomial");
  return r;
}

std::vector<double> sample_radii(std::mt19937_64& rng, double R, int n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(R * std::pow(100.0, u(rng)));
  return out;
}

}  // namespace

AnnihilatorPoly::AnnihilatorPoly(BiPoly a) : a_(std::move(a)) {
  if (a_.is_zero_poly()) throw Error(ErrorCode::ZeroResultant, "annihilator is the zero polynomial");
  scale_ = max_coeff_abs(a_);
}

int AnnihilatorPoly::deg_z1() const {
  int d = 0;
  for (const auto& c : a_.coeffs()) d = std::max(d, c.degree());
  return d;
}

std::map<std::pair<int, int>, GaussQ> AnnihilatorPoly::coeffs() const {
  std::map<std::pair<int, int>, GaussQ> out;
  for (int j = 0; j <= a_.degree(); ++j) {
    GPoly alpha = a_.coeff(j);
    for (int i = 0; i <= alpha.degree(); ++i)
      if (!alpha.coeff(i).is_zero()) out[{i, j}] = alpha.coeff(i);
  }
  return out;
}

Cplx AnnihilatorPoly::eval_scaled(Cplx z1, Cplx z2) const {
  Cplx v = 0;
  for (int j = a_.degree(); j >= 0; --j) v = v * z2 + eval(a_.coeff(j), z1);
  return v / scale_;
}

std::string AnnihilatorPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto cs = coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
    auto [d1, d2] = it->first;
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str() << ")";
    if (d1 > 0) os << "*z1^" << d1;
    if (d2 > 0) os << "*z2^" << d2;
  }
  return os.str();
}

BiPoly bipoly_content_free(const BiPoly& a) { return primitive(a); }

BiPoly bipoly_gcd(const BiPoly& a0, const BiPoly& b0) {
  BiPoly a = primitive(a0), b = primitive(b0);
  if (a.is_zero_poly()) return b;
  if (b.is_zero_poly()) return a;
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero_poly()) {
    if (b.degree() == 0) return BiPoly(GPoly(GaussQ(1)));
    BiPoly r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  return primitive(a);
}

AnnihilatorPoly normalize_annihilator(const BiPoly& a) {
  if (a.is_zero_poly()) throw Error(ErrorCode::ZeroResultant, "annihilator is the zero polynomial");
  BiPoly p = squarefree_z2(a);
  if (p.degree() < 1) throw Error(ErrorCode::ZeroResultant, "annihilator does not involve the value variable");
  if (p.degree() > kDegreeCap) throw Error(ErrorCode::DegreeCapExceeded, "annihilator degree in z2 exceeds the cap");
  GaussQ lc = p.lc().lc();
  return AnnihilatorPoly(p.scaled(GPoly(GaussQ(1) / lc)));
}

AnnihilatorPoly annihilator(const ComplexComponentExpr& e) {
  AlgebraicForm af = algebraic_form(e);
  std::vector<BiPoly> c;
  auto put = [&c](int k, int z2deg, const GaussQ& v) {
    if (v.is_zero()) return;
    if (static_cast<int>(c.size()) <= k) c.resize(static_cast<std::size_t>(k) + 1);
    BiPoly& slot = c[static_cast<std::size_t>(k)];
    slot = slot + BiPoly::monomial(GPoly(v), z2deg);
  };
  if (!af.has_sign()) {
    const GPoly &M = af.r0.den, &N = af.r0.num;
    for (int k = 0; k <= M.degree(); ++k) put(k, 1, M.coeff(k));
    for (int k = 0; k <= N.degree(); ++k) put(k, 0, -N.coeff(k));
  } else {
    GPoly a = af.r0.den * af.r1.den;
    GPoly b = af.r0.num * af.r1.den;
    GPoly d = af.r1.num * af.r0.den;
    GPoly a2 = a * a, ab = a * b, rest = b * b - d * d;
    for (int k = 0; k <= a2.degree(); ++k) put(k, 2, a2.coeff(k));
    for (int k = 0; k <= ab.degree(); ++k) put(k, 1, ab.coeff(k) * GaussQ(-2));
    for (int k = 0; k <= rest.degree(); ++k) put(k, 0, rest.coeff(k));
  }
  TPoly P(std::move(c));
  return normalize_annihilator(norm_over_radical(P, af.Q));
}

BiPoly ann_const(const GaussQ& c) { return z2_minus(GPoly(c)); }

BiPoly ann_z() { return z2_minus(z1_poly()); }

BiPoly ann_poly_ratio(const GPoly& num, const GPoly& den) { return BiPoly(std::vector<GPoly>{-num, den}); }

BiPoly ann_radical(int p, int q) {
  if (q < 1) throw Error(ErrorCode::InvalidArgument, "radical index must be positive");
  GPoly zp = GPoly::monomial(GaussQ(1), std::abs(p));
  if (p >= 0) return BiPoly::monomial(GPoly(GaussQ(1)), q) - BiPoly(zp);
  return BiPoly::monomial(zp, q) - BiPoly(GPoly(GaussQ(1)));
}

BiPoly ann_sign(const GaussQ& w) { return z2_minus(GPoly(w)) * z2_minus(GPoly(w.conj())); }

BiPoly ann_add(const BiPoly& a, const BiPoly& b) {
  TPoly shift(std::vector<BiPoly>{BiPoly::monomial(GPoly(GaussQ(1)), 1), BiPoly(GPoly(GaussQ(-1)))});
  TPoly bs;
  TPoly pw(BiPoly(GPoly(GaussQ(1))));
  for (int j = 0; j <= b.degree(); ++j) {
    if (!b.coeff(j).is_zero_poly()) bs = bs + pw.scaled(BiPoly(b.coeff(j)));
    pw = pw * shift;
  }
  return eliminate(value_as_t(a), bs);
}

BiPoly ann_mul(const BiPoly& a, const BiPoly& b) {
  const int d = b.degree();
  std::vector<BiPoly> c(static_cast<std::size_t>(d) + 1);
  for (int j = 0; j <= d; ++j) c[static_cast<std::size_t>(d - j)] = BiPoly::monomial(b.coeff(j), j);
  return eliminate(value_as_t(a), TPoly(std::move(c)));
}

BiPoly ann_scale(const BiPoly& a, const GaussQ& c) {
  if (c.is_zero()) return z2_minus(GPoly());
  const int n = a.degree();
  std::vector<GPoly> out;
  for (int j = 0; j <= n; ++j) out.push_back(a.coeff(j).scaled(ring_pow(c, n - j)));
  return BiPoly(std::move(out));
}

BiPoly ann_recip(const BiPoly& a) {
  std::vector<GPoly> c(a.coeffs().rbegin(), a.coeffs().rend());
  return BiPoly(std::move(c));
}

BiPoly ann_conj(const BiPoly& a) {
  std::vector<GPoly> c;
  for (const auto& x : a.coeffs()) c.push_back(conj_coeffs(x));
  return BiPoly(std::move(c));
}

AnnihilatorPoly annihilator_recursive(const ComplexComponentExpr& e) {
  if (auto path = find_unsupported(e)) throw Error(ErrorCode::UnsupportedNode, *path);
  std::function<BiPoly(const StemExpr&)> go = [&](const StemExpr& x) -> BiPoly {
    auto exact = [](const ComplexifiedElement& w) { return w.center_part().to_mode(Mode::Exact).to_gauss(); };
    BiPoly out;
    switch (x.type()) {
      case NodeType::Const: out = ann_const(exact(x.value())); break;
      case NodeType::Z: out = ann_z(); break;
      case NodeType::Add: out = ann_add(go(x.lhs()), go(x.rhs())); break;
      case NodeType::Mul: out = ann_mul(go(x.lhs()), go(x.rhs())); break;
      case NodeType::CInv: out = go(x.child()); break;
      case NodeType::Recip: out = ann_recip(go(x.child())); break;
      case NodeType::PiecewiseSign: out = ann_sign(exact(x.value())); break;
      case NodeType::ScalarFn: {
        const ScalarFnSpec& fn = x.fn();
        BiPoly base = fn.kind == ScalarFnKind::PolyRatio ? ann_poly_ratio(fn.num, fn.den) : ann_radical(fn.p, fn.q);
        out = ann_scale(base, exact(x.value()));
        break;
      }
      case NodeType::ZBar: throw Error(ErrorCode::UnsupportedNode, "ZBar");
    }
    return normalize_annihilator(out).poly();
  };
  return normalize_annihilator(go(e));
}

double annihilator_residual(const AnnihilatorPoly& A, const ComplexEvaluator& e, const DomainSpec& D, int n_samples,
                            std::uint64_t seed) {
  const int d1 = A.deg_z1(), d2 = A.deg_z2();
  double worst = 0;
  for (Cplx z : D.sample(n_samples, seed)) {
    Cplx v = e(z);
    double r = std::abs(A.eval_scaled(z, v)) / (std::pow(1 + std::abs(z), d1) * std::pow(1 + std::abs(v), d2));
    worst = std::max(worst, r);
  }
  return worst;
}

const char* cert_status_name(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "Certified";
    case CertStatus::UnsupportedNode: return "UnsupportedNode";
    case CertStatus::ResidualFailure: return "ResidualFailure";
  }
  return "?";
}

NashCertificate certify_slice_nash(const SliceFunction& f, const SplittingBase& base, int n_samples) {
  NashCertificate cert{base, {}, {}, {}, 0, CertStatus::Certified, {}};
  if (auto path = find_unsupported(f.stem())) {
    cert.status = CertStatus::UnsupportedNode;
    cert.detail = *path;
    return cert;
  }
  if (!is_slice_regular(f, n_samples)) throw Error(ErrorCode::NotSliceRegular, "stem fails the Cauchy-Riemann check");
  cert.components = splitting_components(f, base);
  const auto samples = f.domain().sample(n_samples, 11);
  std::vector<std::vector<Cplx>> values;
  for (Cplx z : samples) values.push_back(splitting_values(f, base, z));
  for (std::size_t k = 0; k < cert.components.size(); ++k) {
    AnnihilatorPoly A = annihilator(cert.components[k]);
    const int d1 = A.deg_z1(), d2 = A.deg_z2();
    double worst = 0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
      Cplx z = samples[s], v = values[s][k];
      worst = std::max(worst, std::abs(A.eval_scaled(z, v)) /
                                  (std::pow(1 + std::abs(z), d1) * std::pow(1 + std::abs(v), d2)));
    }
    cert.per_component.push_back(std::move(A));
    cert.residuals.push_back(worst);
    cert.max_residual = std::max(cert.max_residual, worst);
  }
  if (cert.max_residual > kCertTol) {
    cert.status = CertStatus::ResidualFailure;
    cert.detail = "annihilator residual above tolerance";
  }
  return cert;
}

std::vector<ComplexPoint> zero_locus_bound(const AnnihilatorPoly& A) {
  const BiPoly& p = A.poly();
  int k = 0;
  while (k <= p.degree() && p.coeff(k).is_zero_poly()) ++k;
  if (k == p.degree()) throw Error(ErrorCode::QIdenticallyZeroAtZero, "annihilator is a power of z2 times a function of z1");
  std::vector<ComplexPoint> out;
  GPoly q0 = p.coeff(k);
  if (q0.degree() < 1) return out;
  for (const auto& r : complex_roots(ComplexPolynomial::from_gpoly(q0))) out.push_back(r.z);
  return out;
}

const char* singularity_name(SingularityKind k) { return k == SingularityKind::Removable ? "Removable" : "Pole"; }

SingularityKind classify_singularity(const AnnihilatorPoly& A, const ComplexPoint& z0, const ComplexEvaluator& f) {
  const GPoly& an = A.poly().lc();
  bool vanishes;
  if (z0.mode() == Mode::Exact) {
    vanishes = eval(an, z0.to_gauss()).is_zero();
  } else {
    double scale = 0;
    for (const auto& c : an.coeffs()) scale += std::abs(c.to_complex());
    vanishes = std::abs(eval(an, z0.to_complex())) <= 1e-10 * scale * std::pow(1 + std::abs(z0.to_complex()), an.degree());
  }
  if (!vanishes) return SingularityKind::Removable;
  if (!f) return SingularityKind::Pole;
  auto ring_max = [&](double r) {
    double m = -1;
    for (int k = 0; k < 8; ++k) {
      double th = 0.3 + k * std::numbers::pi / 4;
      try {
        m = std::max(m, std::abs(f(z0.to_complex() + std::polar(r, th))));
      } catch (const Error&) {
      }
    }
    return m;
  };
  double near = ring_max(1e-6), far = ring_max(1e-3);
  if (near < 0 || far < 0) return SingularityKind::Pole;
  return near > 10 * far && near > 1e3 ? SingularityKind::Pole : SingularityKind::Removable;
}

BoundCertificate poly_bound_at_infinity(const AnnihilatorPoly& A) {
  const BiPoly& p = A.poly();
  const int n = p.degree();
  const GPoly& an = p.lc();
  const int d = an.degree();
  const double lc = std::abs(an.lc().to_complex());
  double s = 0;
  for (int k = 0; k < d; ++k) s += std::abs(an.coeff(k).to_complex()) / lc;
  BoundCertificate b;
  b.R = std::max(1.0, 2 * s);
  const double C1 = 0.5 * lc * std::pow(b.R, d);
  double C2 = 0;
  for (int j = 0; j < n; ++j) {
    const GPoly& a = p.coeff(j);
    double sum = 0;
    for (const auto& c : a.coeffs()) sum += std::abs(c.to_complex());
    C2 = std::max(C2, sum);
    if (!a.is_zero_poly()) b.m = std::max(b.m, a.degree());
  }
  b.C = 1 + n * C2 / C1;
  return b;
}

BoundCheck validate_bound(const BoundCertificate& b, const ComplexEvaluator& f, const DomainSpec& D,
                          std::uint64_t seed, int n_samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  BoundCheck out;
  out.margin = 1;
  for (double r : sample_radii(rng, b.R, n_samples)) {
    Cplx z = std::polar(r, ang(rng));
    if (!D.contains(z)) continue;
    double env = b.C * (1 + std::pow(std::abs(z), b.m));
    out.margin = std::min(out.margin, 1 - std::abs(f(z)) / env);
    ++out.samples;
  }
  out.passed = out.samples > 0 && out.margin >= 0;
  return out;
}

BoundCertificate slice_poly_bound(const SliceFunction& f, const NashCertificate& cert) {
  if (cert.status != CertStatus::Certified) throw Error(ErrorCode::InvalidArgument, "bound needs a certified function");
  BoundCertificate out;
  double Cmax = 1;
  for (const auto& A : cert.per_component) {
    BoundCertificate b = poly_bound_at_infinity(A);
    out.m = std::max(out.m, b.m);
    out.R = std::max(out.R, b.R);
    Cmax = std::max(Cmax, b.C);
  }
  out.C = (u_A(f.kind()) + 1) * 2 * Cmax;
  return out;
}

BoundCheck validate_slice_bound(const BoundCertificate& b, const SliceFunction& f, std::uint64_t seed, int n_samples) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  BoundCheck out;
  out.margin = 1;
  int i = 0;
  for (double r : sample_radii(rng, b.R, n_samples)) {
    Cplx z = std::polar(r, ang(rng));
    if (!f.domain().contains(z)) continue;
    ImaginaryUnit J = random_imaginary_unit(f.kind(), seed * 1000 + static_cast<std::uint64_t>(i++), Mode::Float);
    AlgebraElement x = phi(J, ComplexPoint::from_complex(z));
    double env = b.C * (1 + std::pow(std::abs(z), b.m));
    out.margin = std::min(out.margin, 1 - slice_eval(f, x).abs() / env);
    ++out.samples;
  }
  out.passed = out.samples > 0 && out.margin >= 0;
  return out;
}

RationalSliceFn reconstruct_rational(const SliceFunction& f, const SplittingBase& base, std::uint64_t seed) {
  auto comps = splitting_components(f, base);
  std::vector<RatFn> parts;
  for (const auto& c : comps) {
    AlgebraicForm af;
    try {
      af = algebraic_form(c);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::UnsupportedNode) throw Error(ErrorCode::NonRationalComponent, e.what());
      throw;
    }
    if (af.Q != 1 || af.has_sign())
      throw Error(ErrorCode::NonRationalComponent, "component is not a rational function of z");
    parts.push_back(af.r0);
  }
  GPoly q(GaussQ(1));
  for (const auto& r : parts) q = lcm(q, r.den);
  q = monic(lcm(q, conj_coeffs(q)));

  const AlgebraKind k = f.kind();
  const Mode m = has_float_constants(f.stem()) ? Mode::Float : Mode::Exact;
  std::vector<GPoly> num;
  int deg = 0;
  for (const auto& r : parts) {
    num.push_back(r.num * divmod(q, r.den).first);
    if (!num.back().is_zero_poly()) deg = std::max(deg, num.back().degree());
  }
  const auto& basis = base.full_basis();
  std::vector<AlgebraElement> pc;
  for (int r = 0; r <= deg; ++r) {
    AlgebraElement c = AlgebraElement::zero(k, Mode::Exact);
    for (std::size_t j = 0; j < num.size(); ++j) {
      GaussQ g = num[j].coeff(r);
      if (g.is_zero()) continue;
      AlgebraElement slice_coeff = phi(base.I(), ComplexPoint::from_gauss(g));
      c += slice_coeff * basis[2 * j].to_mode(Mode::Exact);
    }
    pc.push_back(c.to_mode(m));
  }
  std::vector<AlgebraElement> qc;
  for (const auto& g : q.coeffs()) qc.push_back(AlgebraElement::real(k, Scalar(g.re)).to_mode(m));

  RationalSliceFn out{SlicePolynomial(k, std::move(pc)), SlicePolynomial(k, std::move(qc)), 0};
  SlicePolynomial Pf = out.P.to_mode(Mode::Float), Qf = out.Q.to_mode(Mode::Float);
  int i = 0;
  for (Cplx z : f.domain().sample(25, seed)) {
    ImaginaryUnit J = random_imaginary_unit(k, seed * 7919 + static_cast<std::uint64_t>(i++), m);
    ComplexPoint zp = ComplexPoint::from_complex(z);
    if (m == Mode::Exact) {
      zp = {Scalar(snap_rational(z.real(), 64)), Scalar(snap_rational(z.imag(), 64))};
      if (!f.domain().contains(zp)) continue;
    }
    AlgebraElement x = phi(J, zp);
    AlgebraElement fx = slice_eval(f, x);
    AlgebraElement rx = m == Mode::Exact ? cd_inverse(poly_eval(out.Q, x)) * poly_eval(out.P, x)
                                         : cd_inverse(poly_eval(Qf, x)) * poly_eval(Pf, x);
    out.residual = std::max(out.residual, (fx - rx).abs() / (1 + fx.abs()));
  }
  if (out.residual > kCertTol) throw Error(ErrorCode::VerificationFailure, "reconstruction does not match f");
  return out;
}

SemiregularResult certify_semiregular_nash(const SliceFunction& f, const SplittingBase& base,
                                           const std::vector<ComplexPoint>& singular) {
  SemiregularResult out{certify_slice_nash(f, base), {}, {}};
  const NashCertificate& cert = out.certificate;
  if (cert.status != CertStatus::Certified) return out;
  for (const ComplexPoint& z0 : singular) {
    bool pole = false;
    for (std::size_t k = 0; k < cert.per_component.size() && !pole; ++k) {
      ComplexEvaluator ev = [&](Cplx z) { return component_eval(cert.components[k], z, f.domain()); };
      for (const ComplexPoint& p : {z0, z0.conj()})
        if (classify_singularity(cert.per_component[k], p, ev) == SingularityKind::Pole) pole = true;
    }
    (pole ? out.kept_poles : out.removed).push_back(z0);
  }
  return out;
}

}  // namespace slicecalc
