#include "slicecalc/cayley_dickson.hpp"

#include <array>
#include <cmath>
#include <random>

#include "slicecalc/error.hpp"

namespace slicecalc {

namespace {

using IVec = std::vector<int>;

// Pair-form recursion on integer vectors: x = (α, β) means α + ℓβ at the top level.
IVec pair_conj(const IVec& x) {
  if (x.size() == 1) return x;
  std::size_t h = x.size() / 2;
  IVec a(x.begin(), x.begin() + static_cast<long>(h));
  IVec b(x.begin() + static_cast<long>(h), x.end());
  IVec out = pair_conj(a);
  for (int v : b) out.push_back(-v);
  return out;
}

IVec pair_add(const IVec& a, const IVec& b, int sb) {
  IVec out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + sb * b[k];
  return out;
}

// (α + ℓβ)(γ + ℓδ) = (αγ − δβ^c) + ℓ(α^c δ + γβ)
IVec pair_mul(const IVec& x, const IVec& y) {
  if (x.size() == 1) return {x[0] * y[0]};
  std::size_t h = x.size() / 2;
  IVec a(x.begin(), x.begin() + static_cast<long>(h)), b(x.begin() + static_cast<long>(h), x.end());
  IVec c(y.begin(), y.begin() + static_cast<long>(h)), d(y.begin() + static_cast<long>(h), y.end());
  IVec lo = pair_add(pair_mul(a, c), pair_mul(d, pair_conj(b)), -1);
  IVec hi = pair_add(pair_mul(pair_conj(a), d), pair_mul(c, b), 1);
  lo.insert(lo.end(), hi.begin(), hi.end());
  return lo;
}

// Canonical basis elements written in pair form: level k+1 is {(b,0)} ∪ {(b,0)·(0,1)}.
std::vector<IVec> canonical_basis_pairs(int n) {
  std::vector<IVec> basis{{1}};
  for (int size = 1; size < n; size *= 2) {
    std::vector<IVec> next;
    IVec ell(static_cast<std::size_t>(2 * size), 0);
    ell[static_cast<std::size_t>(size)] = 1;
    for (const auto& b : basis) {
      IVec lifted = b;
      lifted.resize(static_cast<std::size_t>(2 * size), 0);
      next.push_back(lifted);
    }
    for (const auto& b : basis) {
      IVec lifted = b;
      lifted.resize(static_cast<std::size_t>(2 * size), 0);
      next.push_back(pair_mul(lifted, ell));
    }
    basis = std::move(next);
  }
  return basis;
}

struct Table {
  int n = 0;
  std::vector<BasisProduct> prod;  // n*n
};

Table build_table(int n) {
  Table t;
  t.n = n;
  auto basis = canonical_basis_pairs(n);
  t.prod.resize(static_cast<std::size_t>(n * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      IVec p = pair_mul(basis[static_cast<std::size_t>(a)], basis[static_cast<std::size_t>(b)]);
      BasisProduct bp{-1, 0};
      for (int c = 0; c < n && bp.index < 0; ++c) {
        const IVec& e = basis[static_cast<std::size_t>(c)];
        if (p == e) bp = {c, 1};
        else if (pair_add(p, e, 1) == IVec(static_cast<std::size_t>(n), 0)) bp = {c, -1};
      }
      t.prod[static_cast<std::size_t>(a * n + b)] = bp;
    }
  return t;
}

const Table& table_for(AlgebraKind k) {
  static const std::array<Table, 4> tables{build_table(1), build_table(2), build_table(4), build_table(8)};
  switch (k) {
    case AlgebraKind::R: return tables[0];
    case AlgebraKind::C: return tables[1];
    case AlgebraKind::H: return tables[2];
    case AlgebraKind::O: return tables[3];
  }
  return tables[0];
}

void require_compatible(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::KindMismatch, "algebra kinds differ");
  if (a.mode() != b.mode()) throw Error(ErrorCode::ModeMismatch, "exact and float elements mixed");
}

}  // namespace

const char* kind_name(AlgebraKind k) {
  switch (k) {
    case AlgebraKind::R: return "R";
    case AlgebraKind::C: return "C";
    case AlgebraKind::H: return "H";
    case AlgebraKind::O: return "O";
  }
  return "?";
}

AlgebraKind parse_kind(const std::string& s) {
  if (s == "R") return AlgebraKind::R;
  if (s == "C") return AlgebraKind::C;
  if (s == "H") return AlgebraKind::H;
  if (s == "O") return AlgebraKind::O;
  throw Error(ErrorCode::ParseError, "unknown algebra kind '" + s + "'");
}

BasisProduct basis_product(AlgebraKind k, int a, int b) {
  const Table& t = table_for(k);
  return t.prod[static_cast<std::size_t>(a * t.n + b)];
}

AlgebraElement::AlgebraElement(AlgebraKind kind, std::vector<Scalar> coeffs) : kind_(kind), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != slicecalc::dim(kind))
    throw Error(ErrorCode::KindMismatch, std::string("coefficient count does not match kind ") + kind_name(kind));
  Mode m = c_.front().mode();
  for (const auto& s : c_)
    if (s.mode() != m) throw Error(ErrorCode::ModeMismatch, "element coefficients mix exact and float");
}

AlgebraElement AlgebraElement::zero(AlgebraKind k, Mode m) {
  return AlgebraElement(k, std::vector<Scalar>(static_cast<std::size_t>(slicecalc::dim(k)), Scalar::zero(m)));
}

AlgebraElement AlgebraElement::real(AlgebraKind k, const Scalar& s) {
  std::vector<Scalar> c(static_cast<std::size_t>(slicecalc::dim(k)), Scalar::zero(s.mode()));
  c[0] = s;
  return AlgebraElement(k, std::move(c));
}

AlgebraElement AlgebraElement::basis(AlgebraKind k, int index, Mode m) {
  if (index < 0 || index >= slicecalc::dim(k)) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  std::vector<Scalar> c(static_cast<std::size_t>(slicecalc::dim(k)), Scalar::zero(m));
  c[static_cast<std::size_t>(index)] = Scalar::one(m);
  return AlgebraElement(k, std::move(c));
}

AlgebraElement AlgebraElement::from_doubles(AlgebraKind k, const std::vector<double>& v) {
  std::vector<Scalar> c;
  for (double d : v) c.emplace_back(d);
  return AlgebraElement(k, std::move(c));
}

AlgebraElement AlgebraElement::from_rationals(AlgebraKind k, const std::vector<mpq_class>& v) {
  std::vector<Scalar> c;
  for (const auto& q : v) c.emplace_back(q);
  return AlgebraElement(k, std::move(c));
}

AlgebraElement AlgebraElement::im() const {
  AlgebraElement r(*this);
  r.c_[0] = Scalar::zero(mode());
  return r;
}

bool AlgebraElement::is_zero() const {
  for (const auto& s : c_)
    if (!s.is_zero()) return false;
  return true;
}

bool AlgebraElement::is_real() const {
  for (std::size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

bool AlgebraElement::near_zero(double tol) const {
  for (const auto& s : c_)
    if (!s.near_zero(tol)) return false;
  return true;
}

AlgebraElement AlgebraElement::to_mode(Mode m) const {
  if (m == mode()) return *this;
  std::vector<Scalar> c;
  for (const auto& s : c_) c.push_back(s.to_mode(m));
  return AlgebraElement(kind_, std::move(c));
}

std::vector<double> AlgebraElement::to_doubles() const {
  std::vector<double> v;
  for (const auto& s : c_) v.push_back(s.to_double());
  return v;
}

double AlgebraElement::abs() const {
  double s = 0;
  for (const auto& c : c_) {
    double d = c.to_double();
    s += d * d;
  }
  return std::sqrt(s);
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(*this);
  for (auto& s : r.c_) s = -s;
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_compatible(*this, o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return cd_mul(a, b); }

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement r(*this);
  for (auto& c : r.c_) c *= s;
  return r;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) { return a.kind_ == b.kind_ && a.c_ == b.c_; }

std::string AlgebraElement::to_string() const {
  static const char* names[] = {"", "i", "j", "ij", "l", "il", "jl", "(ij)l"};
  std::string out;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string v = c_[k].to_string();
    if (!out.empty() && v[0] != '-') out += "+";
    out += v;
    if (k > 0) out += std::string("*") + names[k];
  }
  return out.empty() ? "0" : out;
}

AlgebraElement cd_mul(const AlgebraElement& a, const AlgebraElement& b) {
  require_compatible(a, b);
  const Table& t = table_for(a.kind());
  int n = t.n;
  if (a.mode() == Mode::Float) {
    std::vector<double> x = a.to_doubles(), y = b.to_doubles(), z(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)] == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        const BasisProduct& p = t.prod[static_cast<std::size_t>(i * n + j)];
        z[static_cast<std::size_t>(p.index)] += p.sign * x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
      }
    }
    return AlgebraElement::from_doubles(a.kind(), z);
  }
  std::vector<mpq_class> z(static_cast<std::size_t>(n));
  mpq_class tmp;
  for (int i = 0; i < n; ++i) {
    const mpq_class& xi = a[i].rational();
    if (sgn(xi) == 0) continue;
    for (int j = 0; j < n; ++j) {
      const mpq_class& yj = b[j].rational();
      if (sgn(yj) == 0) continue;
      const BasisProduct& p = t.prod[static_cast<std::size_t>(i * n + j)];
      tmp = xi * yj;
      if (p.sign > 0) z[static_cast<std::size_t>(p.index)] += tmp;
      else z[static_cast<std::size_t>(p.index)] -= tmp;
    }
  }
  return AlgebraElement::from_rationals(a.kind(), z);
}

AlgebraElement cd_conj(const AlgebraElement& a) {
  std::vector<Scalar> c = a.coeffs();
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = -c[k];
  return AlgebraElement(a.kind(), std::move(c));
}

std::pair<Scalar, Scalar> trace_norm(const AlgebraElement& a) {
  Scalar t = a.re() + a.re();
  Scalar n = Scalar::zero(a.mode());
  for (const auto& c : a.coeffs()) n += c * c;
  return {t, n};
}

AlgebraElement cd_inverse(const AlgebraElement& a) {
  auto [t, n] = trace_norm(a);
  if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero element");
  return cd_conj(a).scaled(Scalar::one(a.mode()) / n);
}

AlgebraElement associator(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
  return cd_mul(cd_mul(a, b), c) - cd_mul(a, cd_mul(b, c));
}

AlgebraElement real_part_mixed(const AlgebraElement& q) {
  if (q.kind() != AlgebraKind::H) throw Error(ErrorCode::WrongKind, "real_part_mixed needs a quaternion");
  Mode m = q.mode();
  auto i = AlgebraElement::basis(AlgebraKind::H, 1, m);
  auto j = AlgebraElement::basis(AlgebraKind::H, 2, m);
  auto k = AlgebraElement::basis(AlgebraKind::H, 3, m);
  AlgebraElement s = q - i * q * i - j * q * j - k * q * k;
  return s.scaled(Scalar::from_int(1, m) / Scalar::from_int(4, m));
}

double max_abs_diff(const AlgebraElement& a, const AlgebraElement& b) {
  double m = 0;
  for (int k = 0; k < a.dim(); ++k) m = std::max(m, std::fabs(a[k].to_double() - b[k].to_double()));
  return m;
}

ImaginaryUnit::ImaginaryUnit(AlgebraElement e) : e_(std::move(e)) {
  auto [t, n] = trace_norm(e_);
  bool ok = e_.mode() == Mode::Exact ? (t.is_zero() && n == Scalar::one(Mode::Exact))
                                     : (std::fabs(t.to_double()) <= kFloatTol && std::fabs(n.to_double() - 1) <= kFloatTol);
  if (!ok) throw Error(ErrorCode::InvalidUnit, "element is not in the sphere of imaginary units: " + e_.to_string());
}

ImaginaryUnit random_imaginary_unit(AlgebraKind kind, std::uint64_t seed, Mode mode) {
  if (kind == AlgebraKind::R) throw Error(ErrorCode::WrongKind, "R has no imaginary units");
  std::mt19937_64 rng(seed);
  int d = d_A(kind);
  if (d == 1) {
    auto e = AlgebraElement::basis(kind, 1, mode);
    return ImaginaryUnit((rng() & 1) ? -e : e);
  }
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  std::vector<mpq_class> u(static_cast<std::size_t>(d - 1));
  mpq_class s = 0;
  for (auto& x : u) {
    x = mpq_class(num(rng), den(rng));
    x.canonicalize();
    s += x * x;
  }
  std::vector<mpq_class> p(static_cast<std::size_t>(d));
  for (int k = 0; k < d - 1; ++k) p[static_cast<std::size_t>(k)] = 2 * u[static_cast<std::size_t>(k)] / (s + 1);
  p[static_cast<std::size_t>(d - 1)] = (s - 1) / (s + 1);
  int shift = std::uniform_int_distribution<int>(0, d - 1)(rng);
  std::vector<mpq_class> c(static_cast<std::size_t>(d + 1));
  for (int k = 0; k < d; ++k) {
    mpq_class v = p[static_cast<std::size_t>(k)];
    if (rng() & 1) v = -v;
    c[static_cast<std::size_t>(1 + (k + shift) % d)] = v;
  }
  auto e = AlgebraElement::from_rationals(kind, c);
  return ImaginaryUnit(e.to_mode(mode));
}

std::vector<std::vector<Scalar>> invert_matrix(std::vector<std::vector<Scalar>> m) {
  std::size_t n = m.size();
  if (n == 0) return m;
  Mode mode = m[0][0].mode();
  std::vector<std::vector<Scalar>> inv(n, std::vector<Scalar>(n, Scalar::zero(mode)));
  for (std::size_t k = 0; k < n; ++k) inv[k][k] = Scalar::one(mode);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    double best = 0;
    for (std::size_t r = col; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      double v = std::fabs(m[r][col].to_double());
      if (piv == n || (mode == Mode::Float && v > best)) {
        piv = r;
        best = v;
        if (mode == Mode::Exact) break;
      }
    }
    if (piv == n || (mode == Mode::Float && best < 1e-12))
      throw Error(ErrorCode::InvalidBase, "singular coordinate matrix");
    std::swap(m[col], m[piv]);
    std::swap(inv[col], inv[piv]);
    Scalar p = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Scalar f = m[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

SplittingBase::SplittingBase(ImaginaryUnit I, std::vector<AlgebraElement> units)
    : I_(std::move(I)), units_(std::move(units)) {
  AlgebraKind k = I_.kind();
  Mode m = I_.mode();
  if (static_cast<int>(units_.size()) != u_A(k))
    throw Error(ErrorCode::InvalidBase, "wrong number of splitting units");
  full_.push_back(AlgebraElement::one(k, m));
  full_.push_back(I_.element());
  for (const auto& u : units_) {
    full_.push_back(u);
    full_.push_back(I_.element() * u);
  }
  std::size_t n = full_.size();
  std::vector<std::vector<Scalar>> mat(n, std::vector<Scalar>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) mat[r][c] = full_[c][static_cast<int>(r)];
  inverse_ = invert_matrix(std::move(mat));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) structure_.push_back(coordinates(full_[a] * full_[b]));
  for (std::size_t a = 0; a < n; ++a) conj_.push_back(coordinates(cd_conj(full_[a])));
}

std::vector<Scalar> SplittingBase::coordinates(const AlgebraElement& a) const {
  if (a.kind() != kind()) throw Error(ErrorCode::KindMismatch, "element and base kinds differ");
  std::size_t n = full_.size();
  Mode m = a.mode();
  if (m == Mode::Exact && mode() == Mode::Float)
    throw Error(ErrorCode::ModeMismatch, "exact element against a float base");
  std::vector<Scalar> out(n, Scalar::zero(m));
  if (m == Mode::Float) {
    std::vector<double> x = a.to_doubles();
    for (std::size_t r = 0; r < n; ++r) {
      double s = 0;
      for (std::size_t c = 0; c < n; ++c) s += inverse_[r][c].to_double() * x[c];
      out[r] = Scalar(s);
    }
    return out;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r] += inverse_[r][c] * a[static_cast<int>(c)];
  return out;
}

AlgebraElement SplittingBase::from_coords(const std::vector<Scalar>& c) const {
  if (c.size() != full_.size()) throw Error(ErrorCode::InvalidArgument, "coordinate count does not match base");
  Mode m = c.front().mode();
  AlgebraElement out = AlgebraElement::zero(kind(), m);
  for (std::size_t k = 0; k < c.size(); ++k) out += full_[k].to_mode(m).scaled(c[k]);
  return out;
}

const std::vector<Scalar>& SplittingBase::structure(int a, int b) const {
  return structure_[static_cast<std::size_t>(a) * full_.size() + static_cast<std::size_t>(b)];
}

const std::vector<Scalar>& SplittingBase::conj_coords(int a) const { return conj_[static_cast<std::size_t>(a)]; }

SplittingBase make_splitting_base(const ImaginaryUnit& I) {
  AlgebraKind k = I.kind();
  Mode m = I.mode();
  switch (k) {
    case AlgebraKind::R: throw Error(ErrorCode::WrongKind, "R has no splitting base");
    case AlgebraKind::C: return SplittingBase(I, {});
    case AlgebraKind::H: {
      // Rotate the standard frame: q i q⁻¹ = I for q = 1 − I·i, then J = q j q⁻¹ ⊥ I.
      auto i = AlgebraElement::basis(k, 1, m);
      auto j = AlgebraElement::basis(k, 2, m);
      AlgebraElement q = AlgebraElement::one(k, m) - I.element() * i;
      bool degenerate = m == Mode::Exact ? q.is_zero() : q.abs() < 1e-6;
      AlgebraElement J = degenerate ? j : q * j * cd_inverse(q);
      return SplittingBase(I, {J});
    }
    case AlgebraKind::O: {
      for (int a = 1; a < 8; ++a)
        for (int b = 1; b < 8; ++b) {
          auto J = AlgebraElement::basis(k, a, m);
          auto L = AlgebraElement::basis(k, b, m);
          try {
            return SplittingBase(I, {J, L, J * L});
          } catch (const Error& e) {
            if (e.code() != ErrorCode::InvalidBase) throw;
          }
        }
      throw Error(ErrorCode::InvalidBase, "no splitting base found");
    }
  }
  throw Error(ErrorCode::WrongKind, "unknown kind");
}

std::vector<Scalar> real_coordinates(const AlgebraElement& a, const SplittingBase& base) {
  return base.coordinates(a);
}

AlgebraElement from_coordinates(const std::vector<Scalar>& coords, const SplittingBase& base) {
  return base.from_coords(coords);
}

}  // namespace slicecalc
