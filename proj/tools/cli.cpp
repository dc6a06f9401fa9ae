#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>

#include "qkloc/batch.hpp"
#include "qkloc/errors.hpp"
#include "qkloc/expr.hpp"
#include "qkloc/format.hpp"
#include "qkloc/json_io.hpp"

namespace qkloc::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  int n = 1;
  int max_degree = 2;
  std::optional<int> fixed_point;
  std::optional<int> i, j, m, k;
  std::optional<int> root_order;
  std::optional<int> tamper;
  std::string method = "both";
  std::string format = "text";
  std::string out;
  std::string expr;
  std::string at;
};

struct Line {
  std::string label;
  std::string latex_label;
  std::string text;
  std::string latex;
};

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  Json session;
  Json result = Json::object();
  std::vector<Line> lines;
  std::vector<Check> checks;

  void show(std::string label, std::string latex_label, std::string text, std::string latex) {
    lines.push_back({std::move(label), std::move(latex_label), std::move(text), std::move(latex)});
  }
  void check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::string render(const Report& r, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json item{{"name", c.name}, {"pass", c.pass}};
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(std::move(item));
    }
    const Json doc{{"session", r.session}, {"result", r.result}, {"checks", std::move(checks)}};
    os << doc.dump(2) << '\n';
    return os.str();
  }
  const auto& s = r.session;
  const bool latex = format == "latex";
  const char* comment = latex ? "% " : "";
  os << comment << "session: n=" << s["n"] << " d=" << s["d"] << " m=" << s["m"] << '\n';
  if (latex) os << "\\begin{align*}\n";
  for (const auto& l : r.lines) {
    if (latex)
      os << l.latex_label << " &= " << l.latex << " \\\\\n";
    else
      os << l.label << " = " << l.text << '\n';
  }
  if (latex) os << "\\end{align*}\n";
  for (const auto& c : r.checks) {
    os << comment << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
    if (!c.detail.empty()) os << " (" << c.detail << ')';
    os << '\n';
  }
  return os.str();
}

int lcm_through(int d) { return default_root_order(d); }

ContextPtr make_session(const Options& o, Report& report, int extra_root = 1) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  if (o.max_degree < 0) throw UsageError("--max-degree must be non-negative");
  const int m = o.root_order ? *o.root_order : std::lcm(lcm_through(o.max_degree), extra_root);
  if (m < 1) throw UsageError("--root-order must be positive");
  auto ctx = AlgebraContext::create(o.n, m);
  report.session = session_json(*ctx, o.max_degree);
  return ctx;
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required flag ") + flag);
  return *v;
}

void check_index(const AlgebraContext& ctx, int i, const char* flag) {
  if (i < 0 || i > ctx.dimension())
    throw UsageError(std::string(flag) + " must lie in 0.." + std::to_string(ctx.dimension()));
}

std::string latex_j(int i, int d) { return "J^{(" + std::to_string(i) + ")}_{" + std::to_string(d) + "}"; }
std::string text_j(int i, int d) { return "J(" + std::to_string(i) + ")_" + std::to_string(d); }

Json character_json(const Character& chi, int root_order) {
  return Json{{"zeta_exp", chi.zeta}, {"mono", json_of(chi.mono, root_order)}};
}

void show_scalar(Report& r, const std::string& label, const std::string& latex_label, const TorusScalar& s) {
  r.show(label, latex_label, to_text(s), to_latex(s));
}

void show_q(Report& r, const std::string& label, const std::string& latex_label, const QFunction& f) {
  r.show(label, latex_label, to_text(f), to_latex(f));
}

Json series_json(const JBundle& b, const std::vector<int>& points, Report& r) {
  Json components = Json::array();
  for (int i : points) {
    Json coeffs = Json::array();
    for (int d = 0; d <= b.truncation; ++d) {
      coeffs.push_back(json_of(b.at(i, d)));
      show_q(r, text_j(i, d), latex_j(i, d), b.at(i, d));
    }
    components.push_back(Json{{"fixed_point", i}, {"coeffs", std::move(coeffs)}});
  }
  return components;
}

std::vector<int> selected_points(const Options& o, const AlgebraContext& ctx) {
  if (o.fixed_point) {
    check_index(ctx, *o.fixed_point, "--fixed-point");
    return {*o.fixed_point};
  }
  std::vector<int> all(static_cast<std::size_t>(ctx.num_vars()));
  std::iota(all.begin(), all.end(), 0);
  return all;
}

void degree0_check(const JBundle& b, Report& r) {
  const auto& ctx = b.ctx;
  const QFunction expected = QFunction::binomial(ctx, 1, Character::of(Monomial::identity(*ctx)));
  bool ok = true;
  for (int i = 0; i < ctx->num_vars(); ++i) ok = ok && qf_eq(b.at(i, 0), expected);
  r.check("degree0_is_1_minus_q", ok);
}

void cmd_j(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  const JBundle b = j_series(ctx, o.max_degree);
  Json comps = series_json(b, selected_points(o, *ctx), r);
  r.result = o.fixed_point ? comps[0] : Json{{"components", std::move(comps)}};
  degree0_check(b, r);
}

void cmd_j_pform(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  const int d = o.max_degree;
  const PQFunction f = j_in_p_basis(ctx, d);
  r.result = Json{{"degree", d}, {"value", json_of(f)}};
  r.show("J_" + std::to_string(d), "J_{" + std::to_string(d) + "}", to_text(f), to_latex(f));
  bool ok = true;
  for (int i = 0; i < ctx->num_vars(); ++i) ok = ok && qf_eq(f.restrict_to(i), j_coeff(ctx, i, d));
  r.check("restrictions_match_fixed_points", ok);
}

QFunction input_qfunction(const Options& o, const ContextPtr& ctx) {
  if (o.expr.empty()) throw UsageError("an expression argument is required");
  return lower_qfunction(parse_expr(o.expr, ctx->dimension()), ctx);
}

std::string locus_label(const PoleLocus& l, int order, int root_order) {
  std::string s = "1 - q*(" + to_text(l, root_order) + ")";
  return order == 1 ? "(" + s + ")" : "(" + s + ")^" + std::to_string(order);
}

void cmd_partial_fractions(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  const QFunction f = input_qfunction(o, ctx);
  const PartialFractionForm pf = qf_partial_fractions(f);
  const int M = ctx->root_order();
  show_q(r, "laurent part", "\\text{Laurent part}", pf.laurent_part);
  Json terms = Json::array();
  for (const auto& t : pf.fraction_terms) {
    terms.push_back(Json{{"locus", json_of(t.locus, M)}, {"order", t.order}, {"coeff", json_of(t.coeff)}});
    std::string latex_label = "\\left[1 - q\\, " + to_latex(t.locus, M) + "\\right]^{-" + std::to_string(t.order) + "}";
    show_scalar(r, "coeff of 1/" + locus_label(t.locus, t.order, M), latex_label, t.coeff);
  }
  r.result = Json{{"input", json_of(f)}, {"laurent_part", json_of(pf.laurent_part)}, {"terms", std::move(terms)}};
  r.check("recombines_to_input", qf_eq(pf.recombine(), f));
}

void cmd_split_kpm(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  const QFunction f = input_qfunction(o, ctx);
  const KpmSplit s = qf_split_kpm(f);
  show_q(r, "K+", "\\mathcal{K}_{+}", s.kplus);
  show_q(r, "K-", "\\mathcal{K}_{-}", s.kminus);
  r.result = Json{{"input", json_of(f)}, {"kplus", json_of(s.kplus)}, {"kminus", json_of(s.kminus)}};
  r.check("resums_to_input", qf_eq(s.kplus + s.kminus, f));
  r.check("kplus_is_laurent", s.kplus.is_laurent());
  r.check("kminus_has_no_laurent_part", !qf_laurent_part(s.kminus).numerator_range());
}

// The base nu of a pole (1 - q nu), given as z^e times a torus monomial.
PoleLocus parse_locus(const std::string& text, const ContextPtr& ctx) {
  const TorusScalar s = lower_scalar(parse_expr(text, ctx->dimension()), ctx);
  const auto& terms = s.numerator().terms();
  if (!s.is_laurent() || terms.size() != 1) throw UsageError("--at must be z^e times a torus monomial");
  const auto& field = ctx->field();
  for (int e = 0; e < ctx->root_order(); ++e) {
    if (terms[0].coeff == Cyclotomic::root_of_unity(field, e)) return PoleLocus{e, terms[0].mono};
  }
  throw UsageError("--at must be z^e times a torus monomial");
}

void cmd_residue(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  const QFunction f = input_qfunction(o, ctx);
  const int M = ctx->root_order();
  std::vector<PoleLocus> loci;
  if (!o.at.empty()) {
    loci.push_back(parse_locus(o.at, ctx));
  } else {
    std::map<PoleLocus, int> orders;
    for (const auto& t : qf_partial_fractions(f).fraction_terms) orders[t.locus] = std::max(orders[t.locus], t.order);
    for (const auto& [l, order] : orders) {
      if (order == 1) loci.push_back(l);
      else r.check("pole at " + to_text(l, M), true, "order " + std::to_string(order) + " skipped");
    }
  }
  Json items = Json::array();
  for (const auto& l : loci) {
    const TorusScalar res = qf_residue(f, l);
    items.push_back(Json{{"locus", json_of(l, M)}, {"residue", json_of(res)}});
    const TorusScalar point = TorusScalar::character(ctx, l.pole_point(M));
    show_scalar(r, "Res at q = " + to_text(point), "\\operatorname{Res}_{q = " + to_latex(point) + "}", res);
  }
  r.result = Json{{"input", json_of(f)}, {"residues", std::move(items)}};
}

LegSpec leg_from(const Options& o, const AlgebraContext& ctx) {
  LegSpec leg{require(o.i, "--i"), require(o.j, "--j"), require(o.m, "--m")};
  check_index(ctx, leg.i, "--i");
  check_index(ctx, leg.j, "--j");
  if (leg.i == leg.j) throw UsageError("--i and --j must differ");
  if (leg.m < 1) throw UsageError("--m must be positive");
  return leg;
}

std::string leg_suffix(const LegSpec& l) {
  return std::to_string(l.i) + std::to_string(l.j) + "(" + std::to_string(l.m) + ")";
}

void cmd_c_coeff(const Options& o, Report& r) {
  auto ctx = make_session(o, r, o.m.value_or(1));
  const LegSpec leg = leg_from(o, *ctx);
  Json result{{"i", leg.i}, {"j", leg.j}, {"m", leg.m}};
  std::optional<TorusScalar> product, tangent;
  const std::string label = "C_" + leg_suffix(leg);
  const std::string latex_label = "C_{" + std::to_string(leg.i) + std::to_string(leg.j) + "}(" + std::to_string(leg.m) + ")";
  if (o.method != "tangent") {
    product = c_coeff(ctx, leg, CMethod::product);
    result["product"] = json_of(*product);
    show_scalar(r, label + " [product]", latex_label + "^{\\text{prod}}", *product);
  }
  if (o.method != "product") {
    tangent = c_coeff(ctx, leg, CMethod::tangent);
    result["tangent"] = json_of(*tangent);
    show_scalar(r, label + " [tangent]", latex_label + "^{\\text{tan}}", *tangent);
  }
  if (product && tangent) {
    const bool agree = scalar_eq(*product, *tangent);
    result["agree"] = agree;
    r.check("product_equals_tangent", agree);
  }
  r.result = std::move(result);
}

void cmd_tangent_eigenvalues(const Options& o, Report& r) {
  auto ctx = make_session(o, r, o.m.value_or(1));
  const LegSpec leg = leg_from(o, *ctx);
  const int branch = o.k.value_or(0);
  const int M = ctx->root_order();
  Json values = Json::array();
  int idx = 0;
  for (const auto& chi : tangent_characters(ctx, leg, branch)) {
    values.push_back(character_json(chi, M));
    const TorusScalar s = TorusScalar::character(ctx, chi);
    show_scalar(r, "mu_" + std::to_string(idx), "\\mu_{" + std::to_string(idx) + "}", s);
    ++idx;
  }
  r.result = Json{{"i", leg.i}, {"j", leg.j}, {"m", leg.m}, {"branch", branch}, {"eigenvalues", std::move(values)}};
  r.check("eigenvalue_count", idx == ctx->num_vars() * (leg.m + 1) - 2);
}

void cmd_verify_recursion(const Options& o, Report& r) {
  std::vector<LegSpec> legs;
  ContextPtr ctx;
  if (o.i || o.j || o.m) {
    ctx = make_session(o, r, o.m.value_or(1));
    legs.push_back(leg_from(o, *ctx));
  } else {
    ctx = make_session(o, r);
    legs = all_legs(*ctx, o.max_degree);
  }
  const JBundle series = j_series(ctx, o.max_degree);
  const auto reports = verify_recursion_batch(series, legs);
  Json items = Json::array();
  for (const auto& rep : reports) {
    items.push_back(json_of(rep));
    for (const auto& e : rep.entries) {
      const std::string tag = "leg " + leg_suffix(rep.leg) + " d=" + std::to_string(e.degree);
      const std::string ltag = "{}_{" + leg_suffix(rep.leg) + ",\\,d=" + std::to_string(e.degree) + "}";
      show_scalar(r, tag + " lhs", "\\text{lhs}" + ltag, e.lhs);
      show_scalar(r, tag + " rhs", "\\text{rhs}" + ltag, e.rhs);
      r.check(tag, e.pass, e.note);
    }
    if (rep.entries.empty()) r.check("leg " + leg_suffix(rep.leg), true, "no degrees in range");
  }
  r.result = Json{{"legs", std::move(items)}};
}

void cmd_verify_degree2(const Options& o, Report& r) {
  const Degree2Report rep = verify_degree2_example(Degree2Options{o.tamper});
  auto ctx = AlgebraContext::create(1, 2);
  r.session = session_json(*ctx, 2);
  Json coeffs = Json::array();
  std::string text;
  for (const auto& c : rep.specialized_coeffs) {
    coeffs.push_back(json_of(c));
    text += (text.empty() ? "" : ", ") + c.get_str();
  }
  r.show("coefficients at lambda=4", "c\\big|_{\\lambda = 4}", "[" + text + "]", "[" + text + "]");
  r.result = Json{{"identity_holds", rep.identity_holds},
                  {"decomposition_matches", rep.decomposition_matches},
                  {"specialized_holds", rep.specialized_holds},
                  {"specialized_coeffs", std::move(coeffs)}};
  r.check("identity_holds", rep.identity_holds);
  r.check("decomposition_matches", rep.decomposition_matches);
  r.check("specialized_holds", rep.specialized_holds);
}

void cmd_lefschetz(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  std::vector<int> ks;
  if (o.k) ks.push_back(*o.k);
  else
    for (int k = -4; k <= 4; ++k) ks.push_back(k);
  Json items = Json::array();
  for (int k : ks) {
    const TorusScalar trace = lefschetz_trace(ctx, k);
    const TorusScalar residues = lefschetz_residue_form(ctx, k);
    const bool agree = scalar_eq(trace, residues);
    items.push_back(Json{{"k", k}, {"trace", json_of(trace)}, {"residue_form", json_of(residues)}, {"agree", agree}});
    show_scalar(r, "trace k=" + std::to_string(k), "\\chi(\\mathcal{O}(" + std::to_string(k) + "))", trace);
    r.check("k=" + std::to_string(k), agree);
  }
  r.result = Json{{"values", std::move(items)}};
}

void cmd_reconstruct(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  const JBundle series = j_series(ctx, o.max_degree);
  const JBundle rebuilt = reconstruct(ctx, o.max_degree, ReferenceOracle(series));
  Json comps = series_json(rebuilt, selected_points(o, *ctx), r);
  r.result = Json{{"components", std::move(comps)}};
  r.check("matches_closed_form", jbundle_eq(rebuilt, series));
  degree0_check(rebuilt, r);
}

const char* kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::monomial: return "monomial";
    case ValueKind::scalar: return "scalar";
    case ValueKind::qfunction: return "qfunction";
    case ValueKind::ppolynomial: return "ppolynomial";
  }
  return "";
}

void cmd_parse(const Options& o, Report& r) {
  auto ctx = make_session(o, r);
  if (o.expr.empty()) throw UsageError("an expression argument is required");
  const ExprAst ast = parse_expr(o.expr, ctx->dimension());
  const ValueKind kind = classify(ast);
  Json value;
  r.show("ast", "\\text{ast}", ast_to_string(ast), "\\texttt{" + ast_to_string(ast) + "}");
  switch (kind) {
    case ValueKind::monomial: {
      const Monomial m = lower_monomial(ast, *ctx);
      value = json_of(m, ctx->root_order());
      r.show("value", "\\text{value}", to_text(m, ctx->root_order()), to_latex(m, ctx->root_order()));
      break;
    }
    case ValueKind::scalar: {
      const TorusScalar s = lower_scalar(ast, ctx);
      value = json_of(s);
      show_scalar(r, "value", "\\text{value}", s);
      break;
    }
    case ValueKind::qfunction: {
      const QFunction f = lower_qfunction(ast, ctx);
      value = json_of(f);
      show_q(r, "value", "\\text{value}", f);
      break;
    }
    case ValueKind::ppolynomial: {
      const PPolynomial p = lower_ppolynomial(ast, ctx);
      value = json_of(p);
      r.show("value", "\\text{value}", to_text(p), to_latex(p));
      break;
    }
  }
  r.result = Json{{"ast", ast_to_string(ast)}, {"kind", kind_name(kind)}, {"value", std::move(value)}};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus-equivariant quantum K-theory of CP^N: J-function and localization checks", "qkloc"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--n", o.n, "dimension N of CP^N")->check(CLI::PositiveNumber);
  app.add_option("--max-degree", o.max_degree, "Q-degree truncation D")->check(CLI::NonNegativeNumber);
  app.add_option("--fixed-point", o.fixed_point, "restrict output to one fixed point");
  app.add_option("--i", o.i, "source fixed point");
  app.add_option("--j", o.j, "target fixed point");
  app.add_option("--m", o.m, "leg multiplicity")->check(CLI::PositiveNumber);
  app.add_option("--k", o.k, "twist power (lefschetz) or branch (tangent-eigenvalues)");
  app.add_option("--method", o.method, "c-coeff derivation")->check(CLI::IsMember({"product", "tangent", "both"}));
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "latex"}));
  app.add_option("--root-order", o.root_order, "root order M")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "write the report to a file");

  using Handler = void (*)(const Options&, Report&);
  Handler handler = nullptr;
  auto sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->callback([&handler, h] { handler = h; });
    return s;
  };
  auto expr_sub = [&](const char* name, const char* help, Handler h) {
    CLI::App* s = sub(name, help, h);
    s->add_option("expr", o.expr, "expression")->required();
    return s;
  };
  sub("j", "small J-function components", cmd_j);
  sub("j-pform", "degree-D coefficient in the P basis", cmd_j_pform);
  expr_sub("partial-fractions", "partial fractions of a q-rational expression", cmd_partial_fractions);
  expr_sub("split-kpm", "K+ / K- split of a q-rational expression", cmd_split_kpm);
  expr_sub("residue", "residues Res f dq/q at simple poles", cmd_residue)
      ->add_option("--at", o.at, "pole base nu of (1 - q nu), as z^e times a monomial");
  sub("c-coeff", "C_ij(m) by product and tangent formulas", cmd_c_coeff);
  sub("tangent-eigenvalues", "torus weights on the leg tangent space", cmd_tangent_eigenvalues);
  sub("verify-recursion", "residue recursion between fixed points", cmd_verify_recursion);
  sub("verify-degree2", "five-term degree-2 fraction identity for CP^1", cmd_verify_degree2)
      ->add_option("--tamper", o.tamper, "perturb coefficient 0..4 by +1");
  sub("lefschetz", "Lefschetz trace against its residue form", cmd_lefschetz);
  sub("reconstruct", "rebuild J from pole parts and the reference oracle", cmd_reconstruct);
  expr_sub("parse", "parse and lower an expression", cmd_parse);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return usage_error;
  }

  Report report;
  std::string text;
  try {
    handler(o, report);
    text = render(report, o.format);
  } catch (const OracleError& e) {
    err << "verification error: " << e.what() << '\n';
    return verification_failed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }

  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out);
    if (!(file << text)) {
      err << "error: cannot write " << o.out << '\n';
      return usage_error;
    }
  }
  return report.pass() ? ok : verification_failed;
}

}  // namespace qkloc::cli
