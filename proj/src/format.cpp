#include "qkloc/format.hpp"

#include <vector>

namespace qkloc {

namespace {

struct Style {
  bool latex;
};

// Joins signed pieces as "a + b - c".
std::string join_signed(const std::vector<std::string>& pieces) {
  if (pieces.empty()) return "0";
  std::string out = pieces.front();
  for (std::size_t k = 1; k < pieces.size(); ++k) {
    const auto& p = pieces[k];
    if (!p.empty() && p.front() == '-')
      out += " - " + p.substr(1);
    else
      out += " + " + p;
  }
  return out;
}

bool is_sum(const std::string& s) {
  int depth = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const char c = s[k];
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (depth == 0 && k > 0 && (c == '+' || c == '-') && s[k - 1] == ' ') return true;
  }
  return false;
}

std::string wrap(const std::string& s, const Style& st) {
  if (!is_sum(s)) return s;
  return st.latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
}

std::string rational(const Rational& r, const Style& st) {
  if (!st.latex || r.get_den() == 1) return to_string(r);
  const std::string sign = r < 0 ? "-" : "";
  return sign + "\\frac{" + Integer(abs(r.get_num())).get_str() + "}{" + r.get_den().get_str() + "}";
}

std::string exponent(const Rational& e, const Style& st) {
  if (st.latex) return "^{" + to_string(e) + "}";
  if (e.get_den() == 1) return "^" + to_string(e);
  return "^(" + to_string(e) + ")";
}

std::string monomial(const Monomial& m, int order, const Style& st) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    const Rational e = m.exponent(v, order);
    if (e == 0) continue;
    std::string f = st.latex ? "\\Lambda_{" + std::to_string(v) + "}" : "L" + std::to_string(v);
    if (e != 1) f += exponent(e, st);
    if (!out.empty() && !st.latex) out += "*";
    out += f;
  }
  return out.empty() ? "1" : out;
}

std::string zeta_power(int k, int order, const Style& st) {
  std::string z = st.latex ? "\\zeta_{" + std::to_string(order) + "}" : "z";
  if (k != 1) z += st.latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k);
  return z;
}

std::string cyclotomic(const Cyclotomic& c, const Style& st) {
  std::vector<std::string> pieces;
  for (std::size_t k = 0; k < c.coeffs().size(); ++k) {
    const Rational& r = c.coeffs()[k];
    if (r == 0) continue;
    if (k == 0) {
      pieces.push_back(rational(r, st));
      continue;
    }
    const std::string z = zeta_power(static_cast<int>(k), c.order(), st);
    if (r == 1)
      pieces.push_back(z);
    else if (r == -1)
      pieces.push_back("-" + z);
    else
      pieces.push_back(rational(r, st) + (st.latex ? " " : "*") + z);
  }
  return join_signed(pieces);
}

// coeff * body with unit coefficients elided.
std::string scaled(const std::string& coeff, const std::string& body, const Style& st) {
  if (body == "1") return coeff;
  if (coeff == "1") return body;
  if (coeff == "-1") return "-" + body;
  return wrap(coeff, st) + (st.latex ? " " : "*") + body;
}

std::string laurent(const LaurentPolynomial& p, const Style& st) {
  std::vector<std::string> pieces;
  const int order = p.session().root_order();
  for (const auto& t : p.terms()) pieces.push_back(scaled(cyclotomic(t.coeff, st), monomial(t.mono, order, st), st));
  return join_signed(pieces);
}

std::string binomial(const std::string& inner, int mult, const Style& st) {
  std::string f = st.latex ? "\\left(1 - " + inner + "\\right)" : "(1 - " + inner + ")";
  if (mult != 1) f += st.latex ? "^{" + std::to_string(mult) + "}" : "^" + std::to_string(mult);
  return f;
}

std::string fraction(const std::string& num, const std::vector<std::string>& den, const Style& st) {
  if (den.empty()) return num;
  std::string d;
  for (const auto& f : den) d += d.empty() || st.latex ? f : "*" + f;
  if (st.latex) return "\\frac{" + num + "}{" + d + "}";
  return "(" + num + ")/(" + d + ")";
}

std::string scalar(const TorusScalar& s, const Style& st) {
  const int order = s.context()->root_order();
  std::vector<std::string> den;
  for (const auto& [y, k] : s.denominator()) den.push_back(binomial(monomial(y, order, st), k, st));
  return fraction(laurent(s.numerator(), st), den, st);
}

std::string q_power(int p, const Style& st) {
  if (p == 0) return "1";
  if (p == 1) return "q";
  return st.latex ? "q^{" + std::to_string(p) + "}" : "q^" + std::to_string(p);
}

std::vector<std::string> q_denominator(const QFunction::Denominator& den, int order, const Style& st) {
  std::vector<std::string> out;
  for (const auto& [factor, k] : den) {
    std::string inner = q_power(factor.a, st);
    if (!factor.mu.is_identity()) inner += (st.latex ? "" : "*") + monomial(factor.mu, order, st);
    out.push_back(binomial(inner, k, st));
  }
  return out;
}

std::string qfunction(const QFunction& f, const Style& st) {
  std::vector<std::string> pieces;
  for (const auto& [p, c] : f.numerator()) pieces.push_back(scaled(scalar(c, st), q_power(p, st), st));
  return fraction(join_signed(pieces), q_denominator(f.denominator(), f.context()->root_order(), st), st);
}

std::string hopf_power(std::size_t k, const Style& st) {
  if (k == 0) return "1";
  if (k == 1) return "P";
  return st.latex ? "P^{" + std::to_string(k) + "}" : "P^" + std::to_string(k);
}

std::string ppoly(const PPolynomial& p, const Style& st) {
  std::vector<std::string> pieces;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    pieces.push_back(scaled(scalar(p.coeffs()[k], st), hopf_power(k, st), st));
  }
  return join_signed(pieces);
}

std::string pqfunction(const PQFunction& f, const Style& st) {
  std::vector<std::string> pieces;
  for (const auto& [p, c] : f.num) pieces.push_back(scaled(ppoly(c, st), q_power(p, st), st));
  return fraction(join_signed(pieces), q_denominator(f.den, f.ctx->root_order(), st), st);
}

std::string locus(const PoleLocus& l, int order, const Style& st) {
  const std::string root = monomial(l.root, order, st);
  if (l.zeta_exp == 0) return root;
  return scaled(zeta_power(static_cast<int>(l.zeta_exp), order, st), root, st);
}

constexpr Style kText{false};
constexpr Style kLatex{true};

}  // namespace

std::string to_text(const Cyclotomic& c) { return cyclotomic(c, kText); }
std::string to_text(const Monomial& m, int root_order) { return monomial(m, root_order, kText); }
std::string to_text(const LaurentPolynomial& p) { return laurent(p, kText); }
std::string to_text(const TorusScalar& s) { return scalar(s, kText); }
std::string to_text(const QFunction& f) { return qfunction(f, kText); }
std::string to_text(const PPolynomial& p) { return ppoly(p, kText); }
std::string to_text(const PQFunction& f) { return pqfunction(f, kText); }
std::string to_text(const PoleLocus& l, int root_order) { return locus(l, root_order, kText); }

std::string to_latex(const Rational& r) { return rational(r, kLatex); }
std::string to_latex(const Cyclotomic& c) { return cyclotomic(c, kLatex); }
std::string to_latex(const Monomial& m, int root_order) { return monomial(m, root_order, kLatex); }
std::string to_latex(const LaurentPolynomial& p) { return laurent(p, kLatex); }
std::string to_latex(const TorusScalar& s) { return scalar(s, kLatex); }
std::string to_latex(const QFunction& f) { return qfunction(f, kLatex); }
std::string to_latex(const PPolynomial& p) { return ppoly(p, kLatex); }
std::string to_latex(const PQFunction& f) { return pqfunction(f, kLatex); }
std::string to_latex(const PoleLocus& l, int root_order) { return locus(l, root_order, kLatex); }

}  // namespace qkloc
