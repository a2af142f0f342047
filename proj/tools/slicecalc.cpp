#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>

#include "json_out.hpp"
#include "slicecalc/dsl.hpp"
#include "slicecalc/error.hpp"
#include "svg.hpp"

using namespace slicecalc;
using slicecalc::cli::json;
using slicecalc::cli::to_json;

namespace {

struct Options {
  std::string command;
  std::string expr;
  std::string rhs;
  std::string kind = "H";
  std::string mode = "exact";
  std::string domain = "auto";
  std::string output = "json";
  std::string unit;
  std::string at;
  int points = 8;
  std::uint64_t seed = 1;
  double tol = 1e-10;
};

struct Context {
  const Options& o;
  AlgebraKind kind;
  Mode mode;
};

struct Outcome {
  Outcome() = default;
  Outcome(json b, int c = 0, std::string s = {}) : body(std::move(b)), code(c), svg(std::move(s)) {}
  json body;
  int code = 0;
  std::string svg;
};

SliceFunction load(const Context& c, const std::string& text) {
  SliceFunction f = parse_expr(text, c.kind);
  if (c.o.domain == "auto") return f;
  return SliceFunction(f.stem(), f.domain().intersect(DomainSpec::parse(c.o.domain)));
}

SplittingBase base_for(const Context& c) {
  if (c.o.unit.empty()) return make_splitting_base(ImaginaryUnit(AlgebraElement::basis(c.kind, 1, Mode::Exact)));
  ComplexifiedElement w = parse_constant(c.o.unit, c.kind);
  if (!w.y().is_zero()) throw Error(ErrorCode::InvalidArgument, "--unit must be an element of the algebra");
  return make_splitting_base(ImaginaryUnit(w.x()));
}

// Explicit --at points, or seeded points α + βJ with α + iβ drawn from the domain.
std::vector<AlgebraElement> points_for(const Context& c, const DomainSpec& D) {
  std::vector<AlgebraElement> out;
  std::stringstream ss(c.o.at);
  std::string text;
  while (std::getline(ss, text, ';')) {
    if (text.empty()) continue;
    ComplexifiedElement w = parse_constant(text, c.kind);
    if (!w.y().is_zero()) throw Error(ErrorCode::InvalidArgument, "--at must be an element of the algebra");
    out.push_back(w.x().to_mode(c.mode));
  }
  if (!out.empty()) return out;
  std::vector<Cplx> zs = D.sample(c.o.points, c.o.seed);
  for (std::size_t k = 0; k < zs.size() && static_cast<int>(out.size()) < c.o.points; ++k) {
    ImaginaryUnit J = random_imaginary_unit(c.kind, c.o.seed * 1009 + k, c.mode);
    ComplexPoint z = c.mode == Mode::Exact
                         ? ComplexPoint(Scalar(snap_rational(zs[k].real(), 64)), Scalar(snap_rational(zs[k].imag(), 64)))
                         : ComplexPoint::from_complex(zs[k]);
    if (!D.contains(z)) continue;
    out.push_back(phi(J, z));
  }
  return out;
}

json header(const Context& c, const SliceFunction& f) {
  return {{"schema_version", 1},
          {"command", c.o.command},
          {"kind", kind_name(c.kind)},
          {"mode", c.o.mode},
          {"expr", render(f.stem())},
          {"domain", f.domain().name()}};
}

Outcome cmd_eval(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  json pts = json::array();
  for (const auto& x : points_for(c, f.domain())) pts.push_back({{"x", to_json(x)}, {"value", to_json(slice_eval(f, x))}});
  json out = header(c, f);
  out["points"] = pts;
  return {out};
}

Outcome cmd_split(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  SplittingBase base = base_for(c);
  json comps = json::array();
  auto parts = splitting_components(f, base);
  for (std::size_t k = 0; k < parts.size(); ++k) comps.push_back({{"k", k}, {"expr", render(parts[k])}});
  json samples = json::array();
  for (Cplx z : f.domain().sample(c.o.points, c.o.seed)) {
    json vals = json::array();
    for (Cplx v : splitting_values(f, base, z)) vals.push_back(to_json(v));
    samples.push_back({{"z", to_json(z)}, {"values", vals}});
  }
  json out = header(c, f);
  out["base"] = to_json(base);
  out["components"] = comps;
  out["samples"] = samples;
  return {out};
}

Outcome cmd_certify(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  NashCertificate cert = certify_slice_nash(f, base_for(c));
  json out = header(c, f);
  json body = to_json(cert);
  out.update(body);
  if (cert.status != CertStatus::Certified) return {out, 1};
  BoundCertificate b = slice_poly_bound(f, cert);
  out["bound"] = to_json(b);
  out["bound_check"] = to_json(validate_slice_bound(b, f, c.o.seed));
  return {out};
}

Outcome cmd_zeros(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  ZeroSet zs;
  auto P = as_slice_polynomial(f);
  if (P && c.mode == Mode::Float) {
    zs = poly_zeros(P->to_mode(Mode::Float));
  } else {
    zs = poly_zero_set(f);
  }
  json out = header(c, f);
  out["zeros"] = to_json(zs);
  if (P) out["normal"] = to_json(SlicePolynomial(P->kind(), [&] {
                           std::vector<AlgebraElement> v;
                           for (const auto& a : poly_normal(*P).coeffs) v.push_back(AlgebraElement::real(P->kind(), a.alpha));
                           return v;
                         }()));
  return {out, 0, cli::zeros_svg(zs)};
}

Outcome cmd_normal(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  SliceFunction n = normal(f);
  json out = header(c, f);
  out["normal"] = render(n.stem());
  if (auto P = as_slice_polynomial(n)) out["polynomial"] = to_json(*P);
  out["slice_preserving"] = is_slice_preserving(n);
  return {out};
}

Outcome cmd_recip(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  SliceFunction r = reciprocal(f);
  json out = header(c, f);
  out["reciprocal"] = render(r.stem());
  out["reciprocal_domain"] = r.domain().name();
  json removed = json::array();
  for (Cplx z : r.domain().removed()) removed.push_back(to_json(z));
  out["removed"] = removed;
  return {out};
}

Outcome cmd_derive(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  json out = header(c, f);
  out["derivative"] = render(slice_derivative(f).stem());
  return {out};
}

Outcome cmd_bound(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  NashCertificate cert = certify_slice_nash(f, base_for(c));
  json out = header(c, f);
  out["status"] = cert_status_name(cert.status);
  if (cert.status != CertStatus::Certified) {
    out["detail"] = cert.detail;
    return {out, 1};
  }
  BoundCertificate b = slice_poly_bound(f, cert);
  BoundCheck chk = validate_slice_bound(b, f, c.o.seed);
  out["bound"] = to_json(b);
  out["bound_check"] = to_json(chk);
  json per = json::array();
  for (const auto& A : cert.per_component) per.push_back(to_json(poly_bound_at_infinity(A)));
  out["component_bounds"] = per;
  return {out, chk.passed ? 0 : 1, cli::bound_svg(f, b, c.o.seed)};
}

Outcome cmd_reconstruct(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  RationalSliceFn r = reconstruct_rational(f, base_for(c), c.o.seed);
  json out = header(c, f);
  out["P"] = to_json(r.P);
  out["Q"] = to_json(r.Q);
  out["residual"] = r.residual;
  return {out};
}

Outcome cmd_check_identity(const Context& c) {
  SliceFunction f = load(c, c.o.expr);
  SliceFunction g = load(c, c.o.rhs);
  DomainSpec D = f.domain().intersect(g.domain());
  double worst = 0;
  bool exact_equal = true;
  json pts = json::array();
  for (const auto& x : points_for(c, D)) {
    AlgebraElement a = slice_eval(f, x), b = slice_eval(g, x);
    worst = std::max(worst, (a - b).abs());
    exact_equal = exact_equal && a == b;
    pts.push_back({{"x", to_json(x)}, {"lhs", to_json(a)}, {"rhs", to_json(b)}});
  }
  bool equal = c.mode == Mode::Exact ? exact_equal : worst <= c.o.tol;
  json out = header(c, f);
  out["rhs"] = render(g.stem());
  out["max_deviation"] = worst;
  out["equal"] = equal;
  out["points"] = pts;
  return {out, equal ? 0 : 1};
}

json error_json(const Options& o, const std::string& code, const std::string& message) {
  return {{"schema_version", 1}, {"command", o.command}, {"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"slicecalc: slice functions over the quaternions and octonions"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"eval", "evaluate f at points"},
      {"split", "complex components in a splitting base"},
      {"certify", "slice-Nash certificate"},
      {"zeros", "zero set of a slice polynomial"},
      {"normal", "normal function N(f)"},
      {"recip", "slice reciprocal"},
      {"derive", "slice derivative"},
      {"bound", "polynomial bound at infinity"},
      {"reconstruct", "slice-rational reconstruction"},
      {"check-identity", "compare two expressions at sample points"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sc = app.add_subcommand(name, help);
    sc->add_option("expr", o.expr, "expression")->required();
    if (name == "check-identity") sc->add_option("rhs", o.rhs, "second expression")->required();
    sc->add_option("--kind", o.kind, "H or O")->check(CLI::IsMember({"H", "O"}));
    sc->add_option("--mode", o.mode, "exact or float")->check(CLI::IsMember({"exact", "float"}));
    sc->add_option("--domain", o.domain, "auto|full|slit|offreal|disk:R|minus:re,im joined by '+'");
    sc->add_option("--points", o.points, "number of sample points")->check(CLI::Range(1, 100000));
    sc->add_option("--seed", o.seed, "sampling seed");
    sc->add_option("--tol", o.tol, "float comparison tolerance");
    sc->add_option("--output", o.output, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    sc->add_option("--at", o.at, "evaluation points as bracket constants separated by ';'");
    sc->add_option("--unit", o.unit, "imaginary unit of the splitting base");
    sc->callback([&o, sc] { o.command = sc->get_name(); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (const char* s = std::getenv("SLICECALC_SEED")) o.seed = std::strtoull(s, nullptr, 10);

  try {
    Context c{o, parse_kind(o.kind), o.mode == "exact" ? Mode::Exact : Mode::Float};
    Outcome r;
    if (o.command == "eval") r = cmd_eval(c);
    else if (o.command == "split") r = cmd_split(c);
    else if (o.command == "certify") r = cmd_certify(c);
    else if (o.command == "zeros") r = cmd_zeros(c);
    else if (o.command == "normal") r = cmd_normal(c);
    else if (o.command == "recip") r = cmd_recip(c);
    else if (o.command == "derive") r = cmd_derive(c);
    else if (o.command == "bound") r = cmd_bound(c);
    else if (o.command == "reconstruct") r = cmd_reconstruct(c);
    else r = cmd_check_identity(c);
    if (o.output == "svg") {
      if (r.svg.empty()) {
        std::cout << error_json(o, "InvalidArgument", "svg output exists for zeros and bound").dump(2) << "\n";
        return 2;
      }
      std::cout << r.svg;
    } else {
      std::cout << r.body.dump(2) << "\n";
    }
    return r.code;
  } catch (const Error& e) {
    std::cout << error_json(o, error_code_name(e.code()), e.what()).dump(2) << "\n";
    return e.code() == ErrorCode::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << error_json(o, "Internal", e.what()).dump(2) << "\n";
    return 1;
  }
}
