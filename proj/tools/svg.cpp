#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace slicecalc::cli {

namespace {

constexpr double kW = 480, kH = 320, kPad = 40;

std::string open_svg() {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW
     << " " << kH << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return os.str();
}

}  // namespace

std::string zeros_svg(const ZeroSet& zs) {
  struct P {
    double a, b;
    int shape;
  };
  std::vector<P> pts;
  for (const auto& r : zs.real_zeros) pts.push_back({r.to_double(), 0, 0});
  for (const auto& s : zs.spherical_zeros) pts.push_back({s.alpha.to_double(), s.beta.to_double(), 1});
  for (const auto& x : zs.isolated_zeros) pts.push_back({x.re().to_double(), x.im().abs(), 2});
  double ext = 1;
  for (const auto& p : pts) ext = std::max({ext, std::fabs(p.a) * 1.2, p.b * 1.2});
  auto X = [&](double a) { return kPad + (a + ext) / (2 * ext) * (kW - 2 * kPad); };
  auto Y = [&](double b) { return kH - kPad - b / ext * (kH - 2 * kPad); };
  std::ostringstream os;
  os << open_svg();
  os << "<line x1=\"" << kPad << "\" y1=\"" << Y(0) << "\" x2=\"" << kW - kPad << "\" y2=\"" << Y(0)
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\"" << kPad
     << "\" stroke=\"black\"/>\n";
  os << "<text x=\"" << kW - kPad << "\" y=\"" << Y(0) + 16 << "\" font-size=\"12\">alpha</text>\n";
  os << "<text x=\"" << X(0) + 4 << "\" y=\"" << kPad - 6 << "\" font-size=\"12\">beta</text>\n";
  for (const auto& p : pts) {
    double x = X(p.a), y = Y(p.b);
    if (p.shape == 1)
      os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"6\" fill=\"steelblue\"/>\n";
    else if (p.shape == 2)
      os << "<rect x=\"" << x - 5 << "\" y=\"" << y - 5 << "\" width=\"10\" height=\"10\" fill=\"firebrick\"/>\n";
    else
      os << "<polygon points=\"" << x << "," << y - 6 << " " << x + 6 << "," << y << " " << x << "," << y + 6 << " "
         << x - 6 << "," << y << "\" fill=\"darkgreen\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string bound_svg(const SliceFunction& f, const BoundCertificate& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1), ang(-std::numbers::pi, std::numbers::pi);
  std::vector<std::pair<double, double>> samples;
  for (int k = 0; k < 128; ++k) {
    double r = b.R * std::pow(100.0, u(rng));
    Cplx z = std::polar(r, ang(rng));
    if (!f.domain().contains(z)) continue;
    ImaginaryUnit J = random_imaginary_unit(f.kind(), seed * 31 + static_cast<std::uint64_t>(k), Mode::Float);
    samples.emplace_back(r, slice_eval(f, phi(J, ComplexPoint::from_complex(z))).abs());
  }
  auto env = [&](double r) { return b.C * (1 + std::pow(r, b.m)); };
  double lx0 = std::log10(b.R), lx1 = std::log10(100 * b.R);
  double ly0 = 0, ly1 = std::log10(env(100 * b.R));
  for (const auto& s : samples) ly0 = std::min(ly0, std::log10(std::max(s.second, 1e-300)));
  ly0 = std::max(ly0, ly1 - 30);
  auto X = [&](double r) { return kPad + (std::log10(r) - lx0) / (lx1 - lx0) * (kW - 2 * kPad); };
  auto Y = [&](double v) {
    double l = std::clamp(std::log10(std::max(v, 1e-300)), ly0, ly1);
    return kH - kPad - (l - ly0) / (ly1 - ly0 + 1e-12) * (kH - 2 * kPad);
  };
  std::ostringstream os;
  os << open_svg();
  os << "<polyline fill=\"none\" stroke=\"firebrick\" points=\"";
  for (int k = 0; k <= 64; ++k) {
    double r = b.R * std::pow(100.0, k / 64.0);
    os << X(r) << "," << Y(env(r)) << " ";
  }
  os << "\"/>\n";
  for (const auto& s : samples)
    os << "<circle cx=\"" << X(s.first) << "\" cy=\"" << Y(s.second) << "\" r=\"2\" fill=\"steelblue\"/>\n";
  os << "<text x=\"" << kPad << "\" y=\"" << kPad - 10 << "\" font-size=\"12\">|f(x)| vs |x|, envelope C(1+|x|^"
     << b.m << ")</text>\n</svg>\n";
  return os.str();
}

}  // namespace slicecalc::cli
