#include "qkloc/expr.hpp"

#include <cctype>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

  ExprAst parse() {
    ExprAst e = expr();
    skip();
    if (pos_ < text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) {
      if (pos_ >= text_.size()) throw SyntaxError(std::string("expected '") + c + "' but reached end of input", pos_);
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
  }

  static ExprAst node(ExprAst::Kind kind, std::size_t at, std::vector<ExprAst> children) {
    ExprAst n;
    n.kind = kind;
    n.position = at;
    n.children = std::move(children);
    return n;
  }

  ExprAst expr() {
    ExprAst lhs = term();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (eat('+'))
        lhs = node(ExprAst::Kind::add, at, {std::move(lhs), term()});
      else if (eat('-'))
        lhs = node(ExprAst::Kind::sub, at, {std::move(lhs), term()});
      else
        return lhs;
    }
  }

  ExprAst term() {
    ExprAst lhs = factor();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (eat('*'))
        lhs = node(ExprAst::Kind::mul, at, {std::move(lhs), factor()});
      else if (eat('/'))
        lhs = node(ExprAst::Kind::div, at, {std::move(lhs), factor()});
      else
        return lhs;
    }
  }

  ExprAst factor() {
    skip();
    const std::size_t at = pos_;
    if (eat('-')) return node(ExprAst::Kind::neg, at, {factor()});
    ExprAst base = atom();
    skip();
    const std::size_t caret = pos_;
    if (!eat('^')) return base;
    ExprAst p = node(ExprAst::Kind::pow, caret, {std::move(base)});
    p.exponent = power();
    return p;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", pos_);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Integer signed_int() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
    skip();
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      throw PowerNotInteger("exponent at position " + std::to_string(pos_) + " is not an integer");
    }
    Integer v = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      throw PowerNotInteger("exponent at position " + std::to_string(pos_) + " is not an integer");
    }
    return negative ? Integer(-v) : v;
  }

  Rational power() {
    skip();
    if (!eat('(')) return Rational(signed_int());
    Rational r(signed_int());
    if (eat('/')) {
      skip();
      Integer den = digits();
      if (den == 0) throw SyntaxError("zero denominator in exponent", pos_);
      r /= Rational(den);
    }
    expect(')');
    return r;
  }

  ExprAst atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      ExprAst n = node(ExprAst::Kind::integer, at, {});
      n.value = digits();
      return n;
    }
    if (c == '(') {
      ++pos_;
      ExprAst inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t end = pos_;
      while (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) ++end;
      const std::string name(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (name == "q") return node(ExprAst::Kind::q, at, {});
      if (name == "P") return node(ExprAst::Kind::hopf, at, {});
      if (name == "z") return node(ExprAst::Kind::zeta, at, {});
      if (name == "L") {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          throw SyntaxError("expected an index after L", pos_);
        }
        const Integer idx = digits();
        if (idx > dimension_) {
          throw UnknownVariable("L" + idx.get_str() + " at position " + std::to_string(at) + " exceeds N = " +
                                std::to_string(dimension_));
        }
        ExprAst n = node(ExprAst::Kind::lambda, at, {});
        n.index = static_cast<int>(idx.get_si());
        return n;
      }
      throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(at));
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view text_;
  int dimension_;
  std::size_t pos_ = 0;
};

bool contains(const ExprAst& ast, ExprAst::Kind kind) {
  if (ast.kind == kind) return true;
  for (const auto& c : ast.children)
    if (contains(c, kind)) return true;
  return false;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

unsigned as_count(const Integer& v) {
  if (!v.fits_slong_p() || v > 4096) throw DomainError("exponent too large");
  return static_cast<unsigned>(v.get_si());
}

// Generic lowering over a value type T with the handful of hooks below.
template <class T, class Ops>
struct Lowering {
  const Ops& ops;

  T lower(const ExprAst& a) const {
    using K = ExprAst::Kind;
    switch (a.kind) {
      case K::add:
        return lower(a.children[0]) + lower(a.children[1]);
      case K::sub:
        return lower(a.children[0]) - lower(a.children[1]);
      case K::mul:
        return lower(a.children[0]) * lower(a.children[1]);
      case K::div:
        return lower(a.children[0]) * invert(a.children[1]);
      case K::neg:
        return -lower(a.children[0]);
      case K::pow: {
        if (!is_integer(a.exponent)) return ops.fractional(a);
        const Integer n = a.exponent.get_num();
        if (n >= 0) return ops.pow(lower(a.children[0]), as_count(n));
        return ops.pow(invert(a.children[0]), as_count(-n));
      }
      default:
        return ops.leaf(a);
    }
  }

  // Inverse distributed over products and powers.
  T invert(const ExprAst& a) const {
    using K = ExprAst::Kind;
    switch (a.kind) {
      case K::mul:
        return invert(a.children[0]) * invert(a.children[1]);
      case K::div:
        return invert(a.children[0]) * lower(a.children[1]);
      case K::neg:
        return -invert(a.children[0]);
      case K::pow: {
        if (!is_integer(a.exponent)) return ops.inverse(ops.fractional(a));
        const Integer n = a.exponent.get_num();
        if (n >= 0) return ops.pow(invert(a.children[0]), as_count(n));
        return ops.pow(lower(a.children[0]), as_count(-n));
      }
      default:
        return ops.inverse(lower(a));
    }
  }
};

struct ScalarOps {
  ContextPtr ctx;

  TorusScalar leaf(const ExprAst& a) const {
    using K = ExprAst::Kind;
    switch (a.kind) {
      case K::integer:
        return TorusScalar::constant(ctx, Rational(a.value));
      case K::lambda:
        return TorusScalar::character(ctx, Character::of(Monomial::variable(*ctx, a.index, 1)));
      case K::zeta:
        return TorusScalar::character(ctx, Character::make(*ctx, 1, Monomial::identity(*ctx)));
      case K::q:
        throw TypeError("q at position " + std::to_string(a.position) + " is not allowed in a torus scalar");
      case K::hopf:
        throw TypeError("P at position " + std::to_string(a.position) + " is not allowed here");
      default:
        throw TypeError("unexpected node");
    }
  }
  TorusScalar pow(const TorusScalar& v, unsigned n) const { return v.pow(n); }
  TorusScalar inverse(const TorusScalar& v) const { return v.inverse(); }
  TorusScalar fractional(const ExprAst& a) const {
    return TorusScalar::character(ctx, Character::of(lower_monomial(a, *ctx)));
  }
};

struct QOps {
  ContextPtr ctx;

  QFunction leaf(const ExprAst& a) const {
    if (a.kind == ExprAst::Kind::q) return QFunction::q_power(ctx, 1);
    return QFunction(ScalarOps{ctx}.leaf(a));
  }
  QFunction pow(const QFunction& v, unsigned n) const { return v.pow(n); }
  QFunction inverse(const QFunction& v) const { return v.inverse(); }
  QFunction fractional(const ExprAst& a) const {
    if (contains(a, ExprAst::Kind::q)) throw PowerNotInteger("fractional power of an expression in q");
    return QFunction(ScalarOps{ctx}.fractional(a));
  }
};

struct POps {
  ContextPtr ctx;

  PPolynomial leaf(const ExprAst& a) const {
    if (a.kind == ExprAst::Kind::hopf) return PPolynomial::hopf(ctx);
    return PPolynomial::constant(ScalarOps{ctx}.leaf(a));
  }
  PPolynomial pow(const PPolynomial& v, unsigned n) const {
    PPolynomial r = PPolynomial::constant(TorusScalar::constant(ctx, 1));
    for (unsigned k = 0; k < n; ++k) r *= v;
    return r;
  }
  PPolynomial inverse(const PPolynomial& v) const {
    for (std::size_t k = 1; k < v.coeffs().size(); ++k)
      if (!v.coeffs()[k].is_zero()) throw DomainError("only torus scalars can be inverted in a P-polynomial");
    return PPolynomial::constant(v.coeffs()[0].inverse());
  }
  PPolynomial fractional(const ExprAst& a) const {
    if (contains(a, ExprAst::Kind::hopf)) throw PowerNotInteger("fractional power of an expression in P");
    return PPolynomial::constant(ScalarOps{ctx}.fractional(a));
  }
};

}  // namespace

ExprAst parse_expr(std::string_view text, int dimension) { return Parser(text, dimension).parse(); }

std::string ast_to_string(const ExprAst& a) {
  using K = ExprAst::Kind;
  auto bin = [&](const char* op) {
    return "(" + ast_to_string(a.children[0]) + " " + op + " " + ast_to_string(a.children[1]) + ")";
  };
  switch (a.kind) {
    case K::integer:
      return a.value.get_str();
    case K::q:
      return "q";
    case K::hopf:
      return "P";
    case K::zeta:
      return "z";
    case K::lambda:
      return "L" + std::to_string(a.index);
    case K::neg:
      return "(-" + ast_to_string(a.children[0]) + ")";
    case K::add:
      return bin("+");
    case K::sub:
      return bin("-");
    case K::mul:
      return bin("*");
    case K::div:
      return bin("/");
    case K::pow:
      return ast_to_string(a.children[0]) + "^(" + to_string(a.exponent) + ")";
  }
  return {};
}

ValueKind classify(const ExprAst& ast) {
  const bool q = contains(ast, ExprAst::Kind::q);
  const bool p = contains(ast, ExprAst::Kind::hopf);
  if (q && p) throw TypeError("an expression may not mix q and P");
  if (q) return ValueKind::qfunction;
  if (p) return ValueKind::ppolynomial;
  const bool pure = !contains(ast, ExprAst::Kind::add) && !contains(ast, ExprAst::Kind::sub) &&
                    !contains(ast, ExprAst::Kind::neg) && !contains(ast, ExprAst::Kind::zeta);
  if (pure) {
    bool only_one = true;
    auto check = [&](auto&& self, const ExprAst& a) -> void {
      if (a.kind == ExprAst::Kind::integer && a.value != 1) only_one = false;
      for (const auto& c : a.children) self(self, c);
    };
    check(check, ast);
    if (only_one) return ValueKind::monomial;
  }
  return ValueKind::scalar;
}

Monomial lower_monomial(const ExprAst& a, const AlgebraContext& ctx) {
  using K = ExprAst::Kind;
  switch (a.kind) {
    case K::integer:
      if (a.value == 1) return Monomial::identity(ctx);
      throw TypeError("coefficient " + a.value.get_str() + " at position " + std::to_string(a.position) +
                      " in a monomial");
    case K::lambda:
      return Monomial::variable(ctx, a.index, 1);
    case K::mul:
      return lower_monomial(a.children[0], ctx) * lower_monomial(a.children[1], ctx);
    case K::div:
      return lower_monomial(a.children[0], ctx) / lower_monomial(a.children[1], ctx);
    case K::pow: {
      const Monomial base = lower_monomial(a.children[0], ctx);
      std::vector<Rational> e;
      for (std::size_t v = 0; v < base.size(); ++v) e.push_back(base.exponent(v, ctx.root_order()) * a.exponent);
      return Monomial::from_exponents(ctx, e);
    }
    case K::q:
      throw TypeError("q at position " + std::to_string(a.position) + " is not a torus variable");
    case K::hopf:
      throw TypeError("P at position " + std::to_string(a.position) + " is not a torus variable");
    default:
      throw TypeError("expression at position " + std::to_string(a.position) + " is not a monomial");
  }
}

TorusScalar lower_scalar(const ExprAst& ast, const ContextPtr& ctx) {
  const ScalarOps ops{ctx};
  return Lowering<TorusScalar, ScalarOps>{ops}.lower(ast);
}

QFunction lower_qfunction(const ExprAst& ast, const ContextPtr& ctx) {
  if (contains(ast, ExprAst::Kind::hopf)) throw TypeError("P is not allowed in a q-function");
  const QOps ops{ctx};
  return Lowering<QFunction, QOps>{ops}.lower(ast);
}

PPolynomial lower_ppolynomial(const ExprAst& ast, const ContextPtr& ctx) {
  if (contains(ast, ExprAst::Kind::q)) throw TypeError("q is not allowed in a P-polynomial");
  const POps ops{ctx};
  return Lowering<PPolynomial, POps>{ops}.lower(ast);
}

}  // namespace qkloc
