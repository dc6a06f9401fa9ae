#include "qkloc/json_io.hpp"

namespace qkloc {

namespace {

Json q_denominator(const QFunction::Denominator& den, int order) {
  Json out = Json::array();
  for (const auto& [factor, k] : den) out.push_back({{"a", factor.a}, {"mu", json_of(factor.mu, order)}, {"mult", k}});
  return out;
}

}  // namespace

Json json_of(const Rational& r) { return to_string(r); }

Json json_of(const Cyclotomic& c) {
  Json coeffs = Json::array();
  for (const auto& v : c.coeffs()) coeffs.push_back(to_string(v));
  return {{"order", c.order()}, {"coeffs", coeffs}};
}

Json json_of(const Monomial& m, int root_order) {
  Json out = Json::array();
  for (std::size_t v = 0; v < m.size(); ++v) out.push_back(to_string(m.exponent(v, root_order)));
  return out;
}

Json json_of(const TorusScalar& s) {
  const int order = s.context()->root_order();
  Json num = Json::array();
  for (const auto& t : s.numerator().terms()) num.push_back({{"mono", json_of(t.mono, order)}, {"coeff", json_of(t.coeff)}});
  Json den = Json::array();
  for (const auto& [y, k] : s.denominator()) den.push_back({{"mu", json_of(y, order)}, {"mult", k}});
  return {{"num", num}, {"den", den}};
}

Json json_of(const QFunction& f) {
  Json num = Json::array();
  for (const auto& [p, c] : f.numerator()) num.push_back(Json::array({p, json_of(c)}));
  return {{"num", num}, {"den", q_denominator(f.denominator(), f.context()->root_order())}};
}

Json json_of(const PPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(json_of(c));
  return out;
}

Json json_of(const PQFunction& f) {
  Json num = Json::array();
  for (const auto& [p, c] : f.num) num.push_back(Json::array({p, json_of(c)}));
  return {{"num", num}, {"den", q_denominator(f.den, f.ctx->root_order())}};
}

Json json_of(const PoleLocus& l, int root_order) {
  return {{"zeta_exp", l.zeta_exp}, {"root", json_of(l.root, root_order)}};
}

Json json_of(const RecursionReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json item{{"degree", e.degree}, {"lhs", json_of(e.lhs)}, {"rhs", json_of(e.rhs)}, {"pass", e.pass}};
    if (!e.note.empty()) item["note"] = e.note;
    entries.push_back(std::move(item));
  }
  return {{"i", r.leg.i}, {"j", r.leg.j}, {"m", r.leg.m}, {"pass", r.pass}, {"entries", entries}};
}

Json session_json(const AlgebraContext& ctx, int max_degree) {
  return {{"n", ctx.dimension()}, {"d", max_degree}, {"m", ctx.root_order()}};
}

}  // namespace qkloc
