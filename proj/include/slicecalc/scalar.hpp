#pragma once

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <variant>

namespace slicecalc {

enum class Mode { Exact, Float };

/// Tolerance used by Float-mode unit and zero predicates.
inline constexpr double kFloatTol = 1e-12;

/// A real number: exact rational or double. Arithmetic never mixes the two.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}
  Scalar(const mpq_class& q) : v_(q) {}
  explicit Scalar(double d) : v_(d) {}

  static Scalar zero(Mode m) { return m == Mode::Exact ? Scalar(mpq_class(0)) : Scalar(0.0); }
  static Scalar one(Mode m) { return from_int(1, m); }
  static Scalar from_int(long v, Mode m);
  /// Parses "p/q", "p", or a decimal literal ("0.25" is read exactly in Exact mode).
  static Scalar parse(const std::string& text, Mode m);

  Mode mode() const { return v_.index() == 0 ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return v_.index() == 0; }

  const mpq_class& rational() const;
  double to_double() const;
  Scalar to_mode(Mode m) const;

  bool is_zero() const;
  bool near_zero(double tol) const { return is_exact() ? is_zero() : std::abs(to_double()) <= tol; }
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Same mode and same value. Float values compare bitwise-equal.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Exact square root when the value is a perfect rational square.
  std::optional<Scalar> exact_sqrt() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  std::string to_string() const;

 private:
  std::variant<mpq_class, double> v_;
};

/// Exact rational equal to the double (every finite double is dyadic).
mpq_class exact_rational(double d);

/// Best rational approximation with denominator at most `max_den`.
mpq_class snap_rational(double x, long max_den);

std::string rational_string(const mpq_class& q);

}  // namespace slicecalc
