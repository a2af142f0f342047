#include "slicecalc/scalar.hpp"

#include <cmath>
#include <sstream>

#include "slicecalc/error.hpp"

namespace slicecalc {

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw Error(ErrorCode::ModeMismatch, "exact and float scalars mixed");
}

}  // namespace

Scalar Scalar::from_int(long v, Mode m) {
  return m == Mode::Exact ? Scalar(mpq_class(v)) : Scalar(static_cast<double>(v));
}

Scalar Scalar::parse(const std::string& text, Mode m) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty number");
  std::string t = text;
  if (t[0] == '+') t = t.substr(1);
  mpq_class q;
  auto dot = t.find('.');
  auto e = t.find_first_of("eE");
  if (e != std::string::npos) {
    if (m == Mode::Float) return Scalar(std::stod(t));
    q = exact_rational(std::stod(t));
  } else if (dot != std::string::npos) {
    bool neg = !t.empty() && t[0] == '-';
    std::string body = neg ? t.substr(1) : t;
    dot = body.find('.');
    std::string digits = body.substr(0, dot) + body.substr(dot + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad decimal '" + text + "'");
    mpz_class num(digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dot - 1);
    q = mpq_class(num, den);
    q.canonicalize();
    if (neg) q = -q;
  } else {
    if (t.find_first_not_of("-0123456789/") != std::string::npos)
      throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    if (q.set_str(t, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + text + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + text + "'");
    q.canonicalize();
  }
  return m == Mode::Exact ? Scalar(q) : Scalar(q.get_d());
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) throw Error(ErrorCode::ModeMismatch, "float scalar where exact was required");
  return std::get<0>(v_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<0>(v_).get_d() : std::get<1>(v_);
}

Scalar Scalar::to_mode(Mode m) const {
  if (m == mode()) return *this;
  if (m == Mode::Float) return Scalar(std::get<0>(v_).get_d());
  return Scalar(exact_rational(std::get<1>(v_)));
}

bool Scalar::is_zero() const {
  return is_exact() ? sgn(std::get<0>(v_)) == 0 : std::get<1>(v_) == 0.0;
}

int Scalar::sign() const {
  if (is_exact()) return sgn(std::get<0>(v_));
  double d = std::get<1>(v_);
  return (d > 0) - (d < 0);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<0>(v_)));
  return Scalar(-std::get<1>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(*this, o);
  if (is_exact()) std::get<0>(v_) += std::get<0>(o.v_);
  else std::get<1>(v_) += std::get<1>(o.v_);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(*this, o);
  if (is_exact()) std::get<0>(v_) -= std::get<0>(o.v_);
  else std::get<1>(v_) -= std::get<1>(o.v_);
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(*this, o);
  if (is_exact()) std::get<0>(v_) *= std::get<0>(o.v_);
  else std::get<1>(v_) *= std::get<1>(o.v_);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same(*this, o);
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "scalar division by zero");
  if (is_exact()) std::get<0>(v_) /= std::get<0>(o.v_);
  else std::get<1>(v_) /= std::get<1>(o.v_);
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) return false;
  if (a.is_exact()) return std::get<0>(a.v_) == std::get<0>(b.v_);
  return std::get<1>(a.v_) == std::get<1>(b.v_);
}

std::optional<Scalar> Scalar::exact_sqrt() const {
  if (!is_exact()) {
    double d = to_double();
    if (d < 0) return std::nullopt;
    return Scalar(std::sqrt(d));
  }
  const mpq_class& q = std::get<0>(v_);
  if (sgn(q) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return Scalar(mpq_class(n, d));
}

std::string Scalar::to_string() const {
  if (is_exact()) return rational_string(std::get<0>(v_));
  std::ostringstream os;
  os.precision(17);
  os << std::get<1>(v_);
  return os.str();
}

mpq_class exact_rational(double d) {
  if (!std::isfinite(d)) throw Error(ErrorCode::InvalidArgument, "non-finite double");
  mpq_class q(d);
  q.canonicalize();
  return q;
}

mpq_class snap_rational(double x, long max_den) {
  // Continued-fraction convergents until the denominator bound is hit.
  bool neg = x < 0;
  double r = std::fabs(x);
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double a = std::floor(r);
    if (a > 1e15) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class h2 = ai * h1 + h0;
    mpz_class k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1.0 / frac;
  }
  if (k1 == 0) return mpq_class(0);
  mpq_class q(h1, k1);
  q.canonicalize();
  return neg ? mpq_class(-q) : q;
}

std::string rational_string(const mpq_class& q) { return q.get_str(10); }

}  // namespace slicecalc
