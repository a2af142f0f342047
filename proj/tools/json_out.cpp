#include "json_out.hpp"

#include "slicecalc/dsl.hpp"

namespace slicecalc::cli {

json to_json(const Scalar& s) {
  if (s.is_exact()) return rational_string(s.rational());
  return s.to_double();
}

json to_json(const AlgebraElement& a) {
  json c = json::array();
  for (const auto& s : a.coeffs()) c.push_back(to_json(s));
  return {{"coords", c}, {"text", a.to_string()}};
}

json to_json(const ComplexifiedElement& w) { return {{"x", to_json(w.x())}, {"y", to_json(w.y())}}; }

json to_json(const ComplexPoint& z) { return {{"re", to_json(z.alpha)}, {"im", to_json(z.beta)}}; }

json to_json(Cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json to_json(const DomainSpec& d) { return d.name(); }

json to_json(const SplittingBase& b) {
  json units = json::array();
  for (const auto& u : b.units()) units.push_back(to_json(u));
  return {{"I", to_json(b.I().element())}, {"units", units}};
}

json to_json(const ZeroSet& zs) {
  json real = json::array(), iso = json::array(), sph = json::array();
  for (const auto& r : zs.real_zeros) real.push_back(to_json(r));
  for (const auto& x : zs.isolated_zeros) iso.push_back(to_json(x));
  for (const auto& s : zs.spherical_zeros) sph.push_back({{"alpha", to_json(s.alpha)}, {"beta", to_json(s.beta)}});
  json out = {{"real", real}, {"isolated", iso}, {"spherical", sph}, {"count", zs.count()}};
  out["exceptional_half_slice"] = zs.exceptional_half_slice ? to_json(zs.exceptional_half_slice->element()) : json();
  return out;
}

json to_json(const SlicePolynomial& p) {
  json c = json::array();
  for (const auto& a : p.coeffs()) c.push_back(to_json(a));
  return {{"degree", p.degree()}, {"coeffs", c}};
}

json to_json(const AnnihilatorPoly& a) {
  json out = json::object();
  for (const auto& [key, v] : a.coeffs())
    out["(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")"] = v.str();
  return out;
}

json to_json(const BoundCertificate& b) { return {{"C", b.C}, {"m", b.m}, {"R", b.R}}; }

json to_json(const BoundCheck& c) { return {{"passed", c.passed}, {"margin", c.margin}, {"samples", c.samples}}; }

json to_json(const NashCertificate& c) {
  json comps = json::array();
  for (std::size_t k = 0; k < c.per_component.size(); ++k)
    comps.push_back({{"expr", render(c.components[k])},
                     {"annihilator", to_json(c.per_component[k])},
                     {"text", c.per_component[k].to_string()},
                     {"residual", c.residuals[k]}});
  json out = {{"status", cert_status_name(c.status)}, {"base", to_json(c.base)}, {"components", comps},
              {"max_residual", c.max_residual}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

}  // namespace slicecalc::cli
