#include "slicecalc/gauss.hpp"

#include "slicecalc/error.hpp"
#include "slicecalc/scalar.hpp"

namespace slicecalc {

GaussQ& GaussQ::operator/=(const GaussQ& o) {
  mpq_class n = o.norm();
  if (sgn(n) == 0) throw Error(ErrorCode::DivisionByZero, "Gaussian rational division by zero");
  mpq_class r = (re * o.re + im * o.im) / n;
  im = (im * o.re - re * o.im) / n;
  re = r;
  return *this;
}

std::string GaussQ::str() const {
  if (sgn(im) == 0) return rational_string(re);
  std::string imag = (im == 1 ? "" : im == -1 ? "-" : rational_string(im)) + "i";
  if (sgn(re) == 0) return imag;
  return rational_string(re) + (sgn(im) > 0 ? "+" : "") + imag;
}

GaussQ GaussQ::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw Error(ErrorCode::ParseError, "empty Gaussian rational");
  if (t.back() != 'i') return GaussQ(Scalar::parse(t, Mode::Exact).rational());
  t.pop_back();
  // Split at the last sign that is not the leading one and not after '/'.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;)
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != '/' && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  std::string re_part = split == std::string::npos ? "" : t.substr(0, split);
  std::string im_part = split == std::string::npos ? t : t.substr(split);
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  GaussQ out;
  if (!re_part.empty()) out.re = Scalar::parse(re_part, Mode::Exact).rational();
  out.im = Scalar::parse(im_part, Mode::Exact).rational();
  return out;
}

GaussQ snap_gauss(Cplx z, long max_den) {
  return {snap_rational(z.real(), max_den), snap_rational(z.imag(), max_den)};
}

}  // namespace slicecalc
