#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace slicecalc {

using Cplx = std::complex<double>;

/// Gaussian rational re + i·im, the exact coefficient field ℚ(i).
struct GaussQ {
  mpq_class re;
  mpq_class im;

  GaussQ() = default;
  GaussQ(const mpq_class& r) : re(r) {}
  GaussQ(const mpq_class& r, const mpq_class& i) : re(r), im(i) {}
  GaussQ(long r) : re(r) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  GaussQ conj() const { return {re, -im}; }
  mpq_class norm() const { return re * re + im * im; }
  Cplx to_complex() const { return {re.get_d(), im.get_d()}; }

  GaussQ operator-() const { return {-re, -im}; }
  GaussQ& operator+=(const GaussQ& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussQ& operator-=(const GaussQ& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussQ& operator*=(const GaussQ& o) {
    mpq_class r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  GaussQ& operator/=(const GaussQ& o);

  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }

  /// "a", "bi", "a+bi" with rational a, b.
  std::string str() const;
  static GaussQ parse(const std::string& text);
};

inline bool is_zero(const GaussQ& a) { return a.is_zero(); }
inline GaussQ exact_div(const GaussQ& a, const GaussQ& b) { return a / b; }
inline GaussQ conj_coeff(const GaussQ& a) { return a.conj(); }

/// Exact Gaussian rational closest (by continued fractions) to a complex double.
GaussQ snap_gauss(Cplx z, long max_den);

}  // namespace slicecalc
