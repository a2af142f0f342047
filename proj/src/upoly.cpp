#include "slicecalc/upoly.hpp"

#include <cstdint>
#include <optional>

namespace slicecalc {

std::pair<GPoly, GPoly> divmod(const GPoly& a, const GPoly& b) {
  if (b.is_zero_poly()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) return {GPoly(), a};
  std::vector<GaussQ> rem = a.coeffs();
  std::vector<GaussQ> q(static_cast<std::size_t>(dq) + 1);
  GaussQ inv = GaussQ(1) / b.lc();
  const auto& bc = b.coeffs();
  for (int k = dq; k >= 0; --k) {
    GaussQ f = rem[static_cast<std::size_t>(k + db)] * inv;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= f * bc[static_cast<std::size_t>(j)];
    q[static_cast<std::size_t>(k)] = f;
  }
  rem.resize(static_cast<std::size_t>(db));
  return {GPoly(std::move(q)), GPoly(std::move(rem))};
}

GPoly monic(const GPoly& a) {
  if (a.is_zero_poly()) return a;
  return a.scaled(GaussQ(1) / a.lc());
}

namespace {

// p ≡ 1 (mod 4), so i reduces to a square root of -1 in F_p.
constexpr std::uint64_t kPrime = 998244353;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) { return a * b % kPrime; }

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e; e >>= 1, b = mulmod(b, b))
    if (e & 1) r = mulmod(r, b);
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

std::optional<std::uint64_t> reduce(const mpq_class& q) {
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), kPrime);
  if (den == 0) return std::nullopt;
  return mulmod(mpz_fdiv_ui(q.get_num_mpz_t(), kPrime), invmod(den));
}

std::optional<std::vector<std::uint64_t>> reduce(const GPoly& a) {
  static const std::uint64_t s = powmod(3, (kPrime - 1) / 4);
  std::vector<std::uint64_t> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) {
    auto re = reduce(c.re);
    auto im = reduce(c.im);
    if (!re || !im) return std::nullopt;
    out.push_back((*re + mulmod(*im, s)) % kPrime);
  }
  return out;
}

void trim(std::vector<std::uint64_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// Sufficient test for gcd(a, b) = 1: if the leading coefficients survive
// reduction, a trivial gcd mod p means the resultant is nonzero.
bool coprime_mod_p(const GPoly& a, const GPoly& b) {
  auto ra = reduce(a);
  auto rb = reduce(b);
  if (!ra || !rb || ra->back() == 0 || rb->back() == 0) return false;
  std::vector<std::uint64_t> x = std::move(*ra), y = std::move(*rb);
  while (!y.empty()) {
    if (y.size() == 1) return true;
    std::uint64_t inv = invmod(y.back());
    while (x.size() >= y.size()) {
      std::uint64_t f = mulmod(x.back(), inv);
      std::size_t shift = x.size() - y.size();
      for (std::size_t j = 0; j < y.size(); ++j)
        x[shift + j] = (x[shift + j] + kPrime - mulmod(f, y[j])) % kPrime;
      trim(x);
    }
    std::swap(x, y);
  }
  return x.size() == 1;
}

}  // namespace

GPoly gcd(GPoly a, GPoly b) {
  if (a.degree() > 0 && b.degree() > 0 && coprime_mod_p(a, b)) return GPoly(GaussQ(1));
  a = monic(a);
  b = monic(b);
  while (!b.is_zero_poly()) {
    GPoly r = monic(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

GPoly lcm(const GPoly& a, const GPoly& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return {};
  return monic(divmod(a * b, gcd(a, b)).first);
}

GPoly conj_coeffs(const GPoly& a) {
  std::vector<GaussQ> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(c.conj());
  return GPoly(std::move(out));
}

GaussQ eval(const GPoly& p, const GaussQ& x) {
  GaussQ acc;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

Cplx eval(const GPoly& p, Cplx x) {
  Cplx acc = 0;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k].to_complex();
  return acc;
}

std::vector<GPoly> squarefree_decomposition(const GPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<GPoly> out;
  GPoly dp = p.derivative();
  GPoly a = gcd(p, dp);
  GPoly b = divmod(p, a).first;
  GPoly c = divmod(dp, a).first;
  GPoly d = c - b.derivative();
  while (b.degree() > 0) {
    GPoly g = gcd(b, d);
    out.push_back(g);
    b = divmod(b, g).first;
    c = divmod(d, g).first;
    d = c - b.derivative();
  }
  return out;
}

}  // namespace slicecalc
