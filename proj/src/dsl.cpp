#include "slicecalc/dsl.hpp"

#include <cctype>
#include <sstream>

#include "slicecalc/error.hpp"

namespace slicecalc {

namespace {

int unit_index(const std::string& name) {
  static const char* names[] = {"1", "i", "j", "k", "l", "il", "jl", "kl"};
  for (int k = 0; k < 8; ++k)
    if (name == names[k]) return k;
  return -1;
}

class Parser {
 public:
  Parser(const std::string& text, AlgebraKind kind) : s_(text), kind_(kind) {}

  StemExpr parse_all() {
    StemExpr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

  ComplexifiedElement constant_all() {
    skip();
    ComplexifiedElement w = bracket();
    skip();
    if (pos_ != s_.size()) fail("trailing text after constant");
    return w;
  }

 private:
  const std::string& s_;
  AlgebraKind kind_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const { throw ParseError(at, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(const std::string& w) {
    skip();
    if (s_.compare(pos_, w.size(), w) != 0) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end])) &&
        std::isalnum(static_cast<unsigned char>(w.back())))
      return false;
    pos_ = end;
    return true;
  }

  std::string identifier() {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(b, pos_ - b);
  }

  // Unsigned decimal or integer literal, optionally followed by /integer when `allow_ratio`.
  mpq_class number(bool allow_ratio) {
    skip();
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ == b) fail("expected a number");
    std::string tok = s_.substr(b, pos_ - b);
    if (allow_ratio && pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      std::size_t d = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      tok += "/" + s_.substr(d, pos_ - d);
    }
    try {
      return Scalar::parse(tok, Mode::Exact).rational();
    } catch (const Error& e) {
      fail_at(b, e.what());
    }
  }

  mpq_class signed_number() {
    bool neg = accept('-');
    if (!neg) accept('+');
    mpq_class q = number(true);
    return neg ? mpq_class(-q) : q;
  }

  long signed_int() {
    skip();
    std::size_t b = pos_;
    bool neg = accept('-');
    skip();
    std::size_t d = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == d) fail_at(b, "expected an integer");
    long v = std::stol(s_.substr(d, pos_ - d));
    return neg ? -v : v;
  }

  GaussQ gauss() {
    mpq_class re = signed_number();
    mpq_class im = 0;
    if (accept(':')) im = signed_number();
    return {re, im};
  }

  // --- bracket constants -------------------------------------------------

  ComplexifiedElement real_constant(const mpq_class& q) {
    return ComplexifiedElement(AlgebraElement::real(kind_, Scalar(q)));
  }

  ComplexifiedElement bracket() {
    std::size_t open = pos_;
    expect('[');
    std::size_t close = s_.find(']', pos_);
    if (close == std::string::npos) fail_at(open, "unterminated '['");
    std::string body = s_.substr(pos_, close - pos_);
    ComplexifiedElement w = body.find_first_of(",|") != std::string::npos ? vector_form() : bracket_sum();
    expect(']');
    return w;
  }

  ComplexifiedElement vector_form() {
    const int n = dim(kind_);
    auto read_list = [&]() {
      std::vector<mpq_class> v;
      v.push_back(signed_number());
      while (accept(',')) v.push_back(signed_number());
      return v;
    };
    std::size_t at = pos_;
    std::vector<mpq_class> x = read_list(), y(static_cast<std::size_t>(n));
    if (accept('|')) y = read_list();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
      fail_at(at, "constant needs " + std::to_string(n) + " coordinates for kind " + kind_name(kind_));
    return {AlgebraElement::from_rationals(kind_, x), AlgebraElement::from_rationals(kind_, y)};
  }

  ComplexifiedElement bracket_sum() {
    bool neg = accept('-');
    if (!neg) accept('+');
    ComplexifiedElement acc = bracket_term();
    if (neg) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc = acc + bracket_term();
      } else if (accept('-')) {
        acc = acc - bracket_term();
      } else {
        return acc;
      }
    }
  }

  ComplexifiedElement bracket_term() {
    ComplexifiedElement acc = bracket_factor();
    while (accept('*')) acc = cx_mul(acc, bracket_factor());
    return acc;
  }

  ComplexifiedElement bracket_factor() {
    skip();
    std::size_t at = pos_;
    if (accept('(')) {
      ComplexifiedElement w = bracket_sum();
      expect(')');
      return w;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      mpq_class q = number(true);
      if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) fail("write '*' between a coefficient and a unit");
      return real_constant(q);
    }
    std::string id = identifier();
    if (id.empty()) fail("expected a unit name or number");
    if (id == "iota") return {AlgebraElement::zero(kind_, Mode::Exact), AlgebraElement::one(kind_, Mode::Exact)};
    int k = unit_index(id);
    if (k < 0) fail_at(at, "unknown unit '" + id + "'");
    if (k >= dim(kind_)) fail_at(at, "unit '" + id + "' does not exist in kind " + std::string(kind_name(kind_)));
    return ComplexifiedElement(AlgebraElement::basis(kind_, k, Mode::Exact));
  }

  // --- expressions -------------------------------------------------------

  StemExpr neg(StemExpr e) { return StemExpr::mul(StemExpr::constant(real_constant(-1)), std::move(e)); }

  StemExpr expr() {
    StemExpr acc = term();
    while (true) {
      if (accept('+')) {
        acc = StemExpr::add(acc, term());
      } else if (accept('-')) {
        acc = StemExpr::add(acc, neg(term()));
      } else {
        return acc;
      }
    }
  }

  StemExpr term() {
    StemExpr acc = unary();
    while (true) {
      if (accept('*')) {
        acc = StemExpr::mul(acc, unary());
      } else if (accept('/')) {
        acc = StemExpr::mul(acc, StemExpr::recip(unary()));
      } else {
        return acc;
      }
    }
  }

  StemExpr unary() {
    if (accept('-')) return neg(unary());
    return power();
  }

  StemExpr power() {
    skip();
    std::size_t at = pos_;
    bool is_z = accept_word("z");
    if (is_z) {
      if (!accept('^')) return StemExpr::z(kind_);
      auto [p, q] = exponent();
      return StemExpr::radical(p, q, ComplexifiedElement::one(kind_, Mode::Exact));
    }
    pos_ = at;
    StemExpr base = atom();
    if (!accept('^')) return base;
    std::size_t eat = pos_;
    auto [p, q] = exponent();
    if (q != 1 || p < 0) fail_at(eat, "only z takes negative or fractional exponents");
    if (p == 0) return StemExpr::one(kind_);
    StemExpr acc = base;
    for (long k = 1; k < p; ++k) acc = StemExpr::mul(acc, base);
    return acc;
  }

  std::pair<int, int> exponent() {
    if (accept('(')) {
      long p = signed_int();
      long q = 1;
      if (accept('/')) q = signed_int();
      expect(')');
      if (q == 0) fail("zero exponent denominator");
      return {static_cast<int>(p), static_cast<int>(q)};
    }
    return {static_cast<int>(signed_int()), 1};
  }

  StemExpr call_arg_z(const char* name) {
    expect('(');
    skip();
    std::size_t at = pos_;
    if (!accept_word("z") || !accept(')')) fail_at(at, std::string(name) + " takes the argument z only");
    return StemExpr::z(kind_);
  }

  StemExpr atom() {
    skip();
    std::size_t at = pos_;
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      StemExpr e = expr();
      expect(')');
      return e;
    }
    if (c == '[') return StemExpr::constant(bracket());
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return StemExpr::constant(real_constant(number(true)));
    if (c == '@') {
      ++pos_;
      return render_form(at);
    }
    std::string id = identifier();
    const auto one = ComplexifiedElement::one(kind_, Mode::Exact);
    if (id == "z") return StemExpr::z(kind_);
    if (id == "zbar") return StemExpr::zbar(kind_);
    if (id == "sqrt") {
      call_arg_z("sqrt");
      return StemExpr::radical(1, 2, one);
    }
    if (id == "cos") return call_arg_z("cos"), StemExpr::transcendental(ScalarFnKind::Cos, one);
    if (id == "sin") return call_arg_z("sin"), StemExpr::transcendental(ScalarFnKind::Sin, one);
    if (id == "exp") return call_arg_z("exp"), StemExpr::transcendental(ScalarFnKind::Exp, one);
    if (id == "sign") {
      expect('+');
      expect('(');
      skip();
      ComplexifiedElement w = bracket();
      expect(')');
      return StemExpr::piecewise_sign(w);
    }
    if (id == "recip" || id == "cinv") {
      expect('(');
      StemExpr e = expr();
      expect(')');
      return id == "recip" ? StemExpr::recip(e) : StemExpr::cinv(e);
    }
    fail_at(at, id.empty() ? "unexpected '" + std::string(1, c) + "'" : "unknown name '" + id + "'");
  }

  StemExpr render_form(std::size_t at) {
    std::string id = identifier();
    ScalarFnSpec fn;
    if (id == "ratio") {
      fn.kind = ScalarFnKind::PolyRatio;
      expect('(');
      std::vector<GaussQ> num{gauss()}, den;
      while (accept(',')) num.push_back(gauss());
      expect(';');
      den.push_back(gauss());
      while (accept(',')) den.push_back(gauss());
      expect(')');
      fn.num = GPoly(num);
      fn.den = GPoly(den);
    } else if (id == "rad") {
      fn.kind = ScalarFnKind::Radical;
      expect('(');
      fn.p = static_cast<int>(signed_int());
      expect(',');
      fn.q = static_cast<int>(signed_int());
      expect(')');
    } else if (id == "exp") {
      fn.kind = ScalarFnKind::Exp;
    } else if (id == "cos") {
      fn.kind = ScalarFnKind::Cos;
    } else if (id == "sin") {
      fn.kind = ScalarFnKind::Sin;
    } else {
      fail_at(at, "unknown form '@" + id + "'");
    }
    skip();
    ComplexifiedElement w = bracket();
    try {
      return StemExpr::scalar_fn(std::move(fn), w);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(at, e.what());
    }
  }
};

std::string vec_string(const AlgebraElement& a) {
  std::string out;
  for (int k = 0; k < a.dim(); ++k) out += (k ? "," : "") + a[k].to_string();
  return out;
}

std::string gauss_list(const GPoly& p) {
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    out += (k ? "," : "") + rational_string(c[k].re);
    if (c[k].im != 0) out += ":" + rational_string(c[k].im);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

StemExpr parse_stem(const std::string& text, AlgebraKind kind) {
  if (kind == AlgebraKind::R) throw Error(ErrorCode::WrongKind, "expressions are over C, H or O");
  try {
    return Parser(text, kind).parse_all();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw ParseError(0, e.what());
    throw;
  }
}

SliceFunction parse_expr(const std::string& text, AlgebraKind kind) {
  SliceFunction f = SliceFunction::from_stem(parse_stem(text, kind));
  if (!check_stemness(f.stem(), f.domain(), 16).passed)
    throw Error(ErrorCode::StemnessViolation, "F(conj z) differs from conj F(z)");
  return f;
}

ComplexifiedElement parse_constant(const std::string& text, AlgebraKind kind) {
  return Parser(text, kind).constant_all();
}

std::string render_constant(const ComplexifiedElement& w) {
  std::string out = "[" + vec_string(w.x());
  if (!w.y().is_zero()) out += "|" + vec_string(w.y());
  return out + "]";
}

std::string render(const StemExpr& e) {
  switch (e.type()) {
    case NodeType::Const: return render_constant(e.value());
    case NodeType::Z: return "z";
    case NodeType::ZBar: return "zbar";
    case NodeType::Add: return "(" + render(e.lhs()) + " + " + render(e.rhs()) + ")";
    case NodeType::Mul: return "(" + render(e.lhs()) + " * " + render(e.rhs()) + ")";
    case NodeType::CInv: return "cinv(" + render(e.child()) + ")";
    case NodeType::Recip: return "recip(" + render(e.child()) + ")";
    case NodeType::PiecewiseSign: return "sign+(" + render_constant(e.value()) + ")";
    case NodeType::ScalarFn: {
      const ScalarFnSpec& fn = e.fn();
      std::string head;
      switch (fn.kind) {
        case ScalarFnKind::PolyRatio: head = "@ratio(" + gauss_list(fn.num) + ";" + gauss_list(fn.den) + ")"; break;
        case ScalarFnKind::Radical:
          head = "@rad(" + std::to_string(fn.p) + "," + std::to_string(fn.q) + ")";
          break;
        default: head = std::string("@") + scalar_fn_name(fn.kind); break;
      }
      return head + render_constant(e.value());
    }
  }
  return "?";
}

}  // namespace slicecalc
