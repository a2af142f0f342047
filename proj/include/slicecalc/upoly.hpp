#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "slicecalc/error.hpp"
#include "slicecalc/gauss.hpp"

namespace slicecalc {

template <class R>
struct RingOne;

template <>
struct RingOne<GaussQ> {
  static GaussQ get() { return GaussQ(1); }
};

/// Dense univariate polynomial, coefficients low degree first, no trailing zeros.
template <class R>
class UPoly {
 public:
  UPoly() = default;
  UPoly(R constant) {
    if (!is_zero(constant)) c_.push_back(std::move(constant));
  }
  explicit UPoly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UPoly monomial(R a, int k) {
    if (is_zero(a)) return {};
    std::vector<R> v(static_cast<std::size_t>(k) + 1);
    v[static_cast<std::size_t>(k)] = std::move(a);
    return UPoly(std::move(v));
  }
  static UPoly x() { return monomial(RingOne<R>::get(), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  const R& lc() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
    return c_.back();
  }
  R coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return R();
    return c_[static_cast<std::size_t>(k)];
  }
  void set_coeff(int k, R v) {
    if (k >= static_cast<int>(c_.size())) c_.resize(static_cast<std::size_t>(k) + 1);
    c_[static_cast<std::size_t>(k)] = std::move(v);
    trim();
  }

  UPoly operator-() const {
    UPoly r(*this);
    for (auto& a : r.c_) a = -a;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<R> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  UPoly scaled(const R& s) const {
    UPoly r(*this);
    for (auto& a : r.c_) a *= s;
    r.trim();
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> out(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) {
      R m(static_cast<long>(k));
      out[k - 1] = c_[k] * m;
    }
    return UPoly(std::move(out));
  }

  /// p(x^q)
  UPoly inflate(int q) const {
    if (c_.empty() || q == 1) return *this;
    std::vector<R> out(static_cast<std::size_t>(degree() * q) + 1);
    for (std::size_t k = 0; k < c_.size(); ++k) out[k * static_cast<std::size_t>(q)] = c_[k];
    return UPoly(std::move(out));
  }

  /// x^k · p
  UPoly shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<R> out(static_cast<std::size_t>(k), R());
    out.insert(out.end(), c_.begin(), c_.end());
    return UPoly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
bool is_zero(const UPoly<R>& p) {
  return p.is_zero_poly();
}

template <class R>
struct RingOne<UPoly<R>> {
  static UPoly<R> get() { return UPoly<R>(RingOne<R>::get()); }
};

template <class R>
R ring_pow(const R& a, int k) {
  R out = RingOne<R>::get();
  for (int i = 0; i < k; ++i) out *= a;
  return out;
}

/// Exact division a / s where every coefficient of a is divisible by s.
template <class R>
UPoly<R> exact_div_scalar(const UPoly<R>& a, const R& s) {
  std::vector<R> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(exact_div(c, s));
  return UPoly<R>(std::move(out));
}

/// Exact polynomial division; throws when b does not divide a.
template <class R>
UPoly<R> exact_div(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero_poly()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.is_zero_poly()) return {};
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  std::vector<R> rem = a.coeffs();
  std::vector<R> q(static_cast<std::size_t>(dq) + 1);
  const auto& bc = b.coeffs();
  for (int k = dq; k >= 0; --k) {
    const R& top = rem[static_cast<std::size_t>(k + db)];
    if (is_zero(top)) continue;
    R f = exact_div(top, b.lc());
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = std::move(f);
  }
  for (const auto& r : rem)
    if (!is_zero(r)) throw Error(ErrorCode::InvalidArgument, "inexact polynomial division");
  return UPoly<R>(std::move(q));
}

/// Pseudo-remainder: lc(b)^(deg a − deg b + 1)·a mod b.
template <class R>
UPoly<R> prem(const UPoly<R>& a, const UPoly<R>& b) {
  if (b.is_zero_poly()) throw Error(ErrorCode::DivisionByZero, "pseudo-remainder by zero");
  int db = b.degree();
  int delta = a.degree() - db;
  if (delta < 0) return a;
  std::vector<R> r = a.coeffs();
  const R& lb = b.lc();
  const auto& bc = b.coeffs();
  int e = delta + 1;
  for (int k = a.degree(); k >= db; --k) {
    R top = r[static_cast<std::size_t>(k)];
    for (auto& x : r) x *= lb;
    if (!is_zero(top))
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= top * bc[static_cast<std::size_t>(j)];
    --e;
  }
  UPoly<R> out(std::vector<R>(r.begin(), r.begin() + db));
  if (e > 0) out = out.scaled(ring_pow(lb, e));
  return out;
}

/// Resultant by the subresultant polynomial remainder sequence (exact divisions only).
template <class R>
R resultant(UPoly<R> a, UPoly<R> b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return R();
  R s = RingOne<R>::get();
  if (a.degree() < b.degree()) {
    std::swap(a, b);
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
  }
  if (b.degree() == 0) return s * ring_pow(b.lc(), a.degree());
  R g = RingOne<R>::get();
  R h = RingOne<R>::get();
  while (true) {
    int delta = a.degree() - b.degree();
    if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
    UPoly<R> r = prem(a, b);
    a = std::move(b);
    if (r.is_zero_poly()) return R();
    b = exact_div_scalar(r, g * ring_pow(h, delta));
    g = a.lc();
    if (delta == 0) {
    } else if (delta == 1) {
      h = g;
    } else {
      h = exact_div(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
    if (b.degree() == 0) {
      int da = a.degree();
      R lbp = ring_pow(b.lc(), da);
      if (da == 1) return s * lbp;
      return s * exact_div(lbp, ring_pow(h, da - 1));
    }
  }
}

// Field-coefficient helpers (ℚ(i)[x]).
using GPoly = UPoly<GaussQ>;

std::pair<GPoly, GPoly> divmod(const GPoly& a, const GPoly& b);
GPoly monic(const GPoly& a);
GPoly gcd(GPoly a, GPoly b);
GPoly lcm(const GPoly& a, const GPoly& b);
GPoly conj_coeffs(const GPoly& a);
GaussQ eval(const GPoly& p, const GaussQ& x);
Cplx eval(const GPoly& p, Cplx x);
/// Yun's square-free decomposition: returns s_1, s_2, … with p = lc·∏ s_k^k.
std::vector<GPoly> squarefree_decomposition(const GPoly& p);

}  // namespace slicecalc
