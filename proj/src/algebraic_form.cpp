#include "slicecalc/algebraic_form.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "slicecalc/error.hpp"

namespace slicecalc {

RatFn::RatFn(GPoly n, GPoly d) {
  if (d.is_zero_poly()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (n.is_zero_poly()) {
    num = GPoly();
    den = GPoly(GaussQ(1));
    return;
  }
  GPoly g = gcd(n, d);
  if (g.degree() > 0) {
    n = divmod(n, g).first;
    d = divmod(d, g).first;
  }
  GaussQ inv = GaussQ(1) / d.lc();
  num = n.scaled(inv);
  den = d.scaled(inv);
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den == b.den) return RatFn(a.num + b.num, a.den);
  return RatFn(a.num * b.den + b.num * a.den, a.den * b.den);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  if (a.den == b.den) return RatFn(a.num - b.num, a.den);
  return RatFn(a.num * b.den - b.num * a.den, a.den * b.den);
}

RatFn operator*(const RatFn& a, const RatFn& b) { return RatFn(a.num * b.num, a.den * b.den); }

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
  return RatFn(a.num * b.den, a.den * b.num);
}

Cplx AlgebraicForm::eval(Cplx z) const {
  Cplx t = Q == 1 ? z : std::exp(std::log(z) / static_cast<double>(Q));
  Cplx v = r0.eval(t);
  if (has_sign()) v += (z.imag() >= 0 ? 1.0 : -1.0) * r1.eval(t);
  return v;
}

namespace {

void visit_all(const StemExpr& e, const std::function<void(const StemExpr&)>& f) {
  f(e);
  for (const auto& c : e.id()->children) visit_all(c, f);
}

GaussQ exact_value(const ComplexifiedElement& w) {
  ComplexPoint c = w.center_part().to_mode(Mode::Exact);
  return c.to_gauss();
}

RatFn t_power(int e) {
  if (e >= 0) return RatFn(GPoly::monomial(GaussQ(1), e), GPoly(GaussQ(1)));
  return RatFn(GPoly(GaussQ(1)), GPoly::monomial(GaussQ(1), -e));
}

AlgebraicForm scale_form(const AlgebraicForm& f, const GaussQ& c) {
  AlgebraicForm out = f;
  out.r0 = f.r0 * RatFn::constant(c);
  out.r1 = f.r1 * RatFn::constant(c);
  return out;
}

}  // namespace

int radical_index(const ComplexComponentExpr& e) {
  int Q = 1;
  visit_all(e, [&Q](const StemExpr& x) {
    if (x.type() == NodeType::ScalarFn && x.fn().kind == ScalarFnKind::Radical) Q = std::lcm(Q, x.fn().q);
  });
  return Q;
}

AlgebraicForm algebraic_form(const ComplexComponentExpr& e, int Q) {
  if (e.kind() != AlgebraKind::R) throw Error(ErrorCode::KindMismatch, "algebraic form needs a complex component");
  if (auto path = find_unsupported(e)) throw Error(ErrorCode::UnsupportedNode, *path);
  std::unordered_map<const StemNode*, AlgebraicForm> memo;
  std::function<AlgebraicForm(const StemExpr&)> go = [&](const StemExpr& x) -> AlgebraicForm {
    auto it = memo.find(x.id());
    if (it != memo.end()) return it->second;
    AlgebraicForm out;
    out.Q = Q;
    switch (x.type()) {
      case NodeType::Const: out.r0 = RatFn::constant(exact_value(x.value())); break;
      case NodeType::Z: out.r0 = t_power(Q); break;
      case NodeType::Add: {
        AlgebraicForm a = go(x.lhs()), b = go(x.rhs());
        out.r0 = a.r0 + b.r0;
        out.r1 = a.r1 + b.r1;
        break;
      }
      case NodeType::Mul: {
        AlgebraicForm a = go(x.lhs()), b = go(x.rhs());
        out.r0 = a.r0 * b.r0 + a.r1 * b.r1;
        out.r1 = a.r0 * b.r1 + a.r1 * b.r0;
        break;
      }
      case NodeType::CInv: out = go(x.child()); break;
      case NodeType::Recip: {
        AlgebraicForm a = go(x.child());
        RatFn d = a.r0 * a.r0 - a.r1 * a.r1;
        if (d.is_zero()) throw Error(ErrorCode::NormalIdenticallyZero, "reciprocal of an identically zero function");
        out.r0 = a.r0 / d;
        out.r1 = RatFn() - a.r1 / d;
        break;
      }
      case NodeType::PiecewiseSign: {
        GaussQ c = exact_value(x.value());
        out.r0 = RatFn::constant(GaussQ(c.re));
        out.r1 = RatFn::constant(GaussQ(0, c.im));
        break;
      }
      case NodeType::ScalarFn: {
        const ScalarFnSpec& fn = x.fn();
        GaussQ c = exact_value(x.value());
        if (fn.kind == ScalarFnKind::PolyRatio) {
          out.r0 = RatFn(fn.num.inflate(Q), fn.den.inflate(Q));
        } else if (fn.kind == ScalarFnKind::Radical) {
          if (Q % fn.q != 0) throw Error(ErrorCode::InvalidArgument, "radical index does not divide Q");
          out.r0 = t_power(fn.p * (Q / fn.q));
        } else {
          throw Error(ErrorCode::UnsupportedNode, scalar_fn_name(fn.kind));
        }
        out = scale_form(out, c);
        break;
      }
      case NodeType::ZBar: throw Error(ErrorCode::UnsupportedNode, "ZBar");
    }
    memo.emplace(x.id(), out);
    return out;
  };
  return go(e);
}

AlgebraicForm algebraic_form(const ComplexComponentExpr& e) { return algebraic_form(e, radical_index(e)); }

}  // namespace slicecalc
