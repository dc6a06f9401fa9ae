#include <random>

#include "doctest.h"
#include "qkloc/errors.hpp"
#include "qkloc/expr.hpp"
#include "qkloc/format.hpp"
#include "qkloc/json_io.hpp"
#include "support.hpp"

using namespace qkloc;
using namespace qkloc::testing;

namespace {

std::size_t syntax_position(std::string_view text, int n = 1) {
  try {
    parse_expr(text, n);
  } catch (const SyntaxError& e) {
    return e.position();
  }
  return std::string::npos;
}

TorusScalar random_scalar(const ContextPtr& ctx, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> expo(-2, 2);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> zeta(0, ctx->root_order() - 1);
  TorusScalar s(ctx);
  for (int t = 0; t < 2; ++t) {
    const Monomial m = Monomial::from_exponents(*ctx, {make_rational(expo(rng), 2), make_rational(expo(rng), 3)});
    s += TorusScalar::character(ctx, Character::make(*ctx, zeta(rng), m), make_rational(coeff(rng), 1 + t));
  }
  const int k = coeff(rng);
  if (k > 0) s = s * TorusScalar::binomial_inverse(ctx, Character::of(lam(ctx, k)));
  return s;
}

}  // namespace

TEST_CASE("parse_expr examples") {
  auto ctx = session(1, 2);
  const ExprAst mono = parse_expr("L0^2 * L1^-1", 1);
  CHECK(classify(mono) == ValueKind::monomial);
  CHECK(lower_monomial(mono, *ctx) == Monomial::from_exponents(*ctx, {Rational(2), Rational(-1)}));

  const ExprAst frac = parse_expr("1/(1 - q*L0/L1)", 1);
  CHECK(classify(frac) == ValueKind::qfunction);
  const QFunction f = lower_qfunction(frac, *&ctx);
  REQUIRE(f.denominator().size() == 1);
  CHECK(f.denominator().begin()->first == QFactor{1, lam(ctx)});
  CHECK(qf_eq(f, qinv(ctx, 1, lam(ctx))));

  CHECK(syntax_position("(1 - q") == 6);
  CHECK_THROWS_AS(parse_expr("(1 - q", 1), SyntaxError);
}

TEST_CASE("parse errors") {
  CHECK(syntax_position("1 + * 2") == 4);
  CHECK(syntax_position("") == 0);
  CHECK(syntax_position("L") == 1);
  CHECK(syntax_position("2 3") == 2);
  CHECK(syntax_position("q^") == 2);
  CHECK(syntax_position("L0^(1/0)") != std::string::npos);
  CHECK_THROWS_AS(parse_expr("x + 1", 1), UnknownVariable);
  CHECK_THROWS_AS(parse_expr("L2", 1), UnknownVariable);
  CHECK_NOTHROW(parse_expr("L2", 2));
  CHECK_THROWS_AS(parse_expr("q^1.5", 1), PowerNotInteger);
  CHECK_THROWS_AS(parse_expr("L0^x", 1), PowerNotInteger);
  CHECK_THROWS_AS(parse_expr("L0^q", 1), PowerNotInteger);
}

TEST_CASE("typed lowering") {
  auto ctx = session(1, 2);
  CHECK_THROWS_AS(lower_scalar(parse_expr("1 - q", 1), ctx), TypeError);
  CHECK_THROWS_AS(lower_monomial(parse_expr("q*L0", 1), *ctx), TypeError);
  CHECK_THROWS_AS(lower_monomial(parse_expr("2*L0", 1), *ctx), TypeError);
  CHECK_THROWS_AS(lower_qfunction(parse_expr("P*q", 1), ctx), TypeError);
  CHECK_THROWS_AS(classify(parse_expr("P*q", 1)), TypeError);
  CHECK_THROWS_AS(lower_ppolynomial(parse_expr("1 - q", 1), ctx), TypeError);
  CHECK_THROWS_AS(lower_qfunction(parse_expr("q^(1/2)", 1), ctx), PowerNotInteger);
  CHECK_THROWS_AS(lower_monomial(parse_expr("L0^(1/3)", 1), *ctx), RootOrderExceeded);
  CHECK_THROWS_AS(lower_qfunction(parse_expr("1/(1 - q - q^2)", 1), ctx), DomainError);

  CHECK(classify(parse_expr("1 - L0", 1)) == ValueKind::scalar);
  CHECK(classify(parse_expr("z", 1)) == ValueKind::scalar);
  CHECK(classify(parse_expr("1 - P/L0", 1)) == ValueKind::ppolynomial);

  CHECK(scalar_eq(lower_scalar(parse_expr("z^2", 1), ctx), scalar(ctx, 1)));
  CHECK(scalar_eq(lower_scalar(parse_expr("(1 - L0/L1^3)/(1 - L0/L1)", 1), ctx),
                  one_minus(ctx, Monomial::from_exponents(*ctx, {Rational(1), Rational(-3)})) *
                      one_minus(ctx, lam(ctx)).inverse()));
  CHECK(lower_monomial(parse_expr("(L0/L1)^(1/2)", 1), *ctx) == lam(ctx, make_rational(1, 2)));
  CHECK(qf_eq(lower_qfunction(parse_expr("q^-2*(1 - q)^2", 1), ctx),
              QFunction::q_power(ctx, -2) * qbinom(ctx, 1, Monomial::identity(*ctx)).pow(2)));
  CHECK(qf_eq(lower_qfunction(parse_expr("1/((1 - q)^2*(1 - q*L0))^-1", 1), ctx),
              qbinom(ctx, 1, Monomial::identity(*ctx)).pow(2) * qbinom(ctx, 1, Monomial::variable(*ctx, 0, 1))));

  const PPolynomial rel = lower_ppolynomial(parse_expr("(1 - P/L0)*(1 - P/L1)", 1), ctx);
  CHECK(rel.is_zero());
}

TEST_CASE("text output reparses to the same value (randomized)") {
  auto ctx = session(1, 6);
  std::mt19937_64 rng(8080);
  std::uniform_int_distribution<int> a_dist(1, 3);
  std::uniform_int_distribution<int> k_dist(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const TorusScalar s = random_scalar(ctx, rng);
    const std::string st = to_text(s);
    CHECK_MESSAGE(scalar_eq(lower_scalar(parse_expr(st, 1), ctx), s), st);

    QFunction f = QFunction::monomial(random_scalar(ctx, rng), k_dist(rng)) + QFunction::monomial(random_scalar(ctx, rng), 2);
    if (trial % 2 == 0) f = f * qinv(ctx, a_dist(rng), lam(ctx, k_dist(rng)));
    const std::string ft = to_text(f);
    CHECK_MESSAGE(qf_eq(lower_qfunction(parse_expr(ft, 1), ctx), f), ft);

    if (trial % 10 == 0) {
      const auto pf = qf_partial_fractions(f);
      for (const auto& t : pf.fraction_terms) {
        CHECK(scalar_eq(lower_scalar(parse_expr(to_text(t.coeff), 1), ctx), t.coeff));
        const QFunction e = elementary_fraction(ctx, t.locus, t.order).times(t.coeff);
        CHECK(qf_eq(lower_qfunction(parse_expr(to_text(e), 1), ctx), e));
      }
    }
  }
}

TEST_CASE("P-polynomials round trip through text") {
  auto ctx = session(2, 1);
  const PPolynomial p = lower_ppolynomial(parse_expr("3*P^2 - P*L0 + 1/(1 - L1/L2)", 2), ctx);
  CHECK(ppoly_eq(lower_ppolynomial(parse_expr(to_text(p), 2), ctx), p));
  const PPolynomial high = lower_ppolynomial(parse_expr("P^5", 2), ctx);
  CHECK(ppoly_eq(lower_ppolynomial(parse_expr(to_text(high), 2), ctx), high));
}

TEST_CASE("text and LaTeX rendering") {
  auto ctx = session(1, 2);
  CHECK(to_text(Monomial::identity(*ctx), 2) == "1");
  CHECK(to_text(lam(ctx, make_rational(-1, 2)), 2) == "L0^(-1/2)*L1^(1/2)");
  CHECK(to_text(qinv(ctx, 1, lam(ctx))) == "(1)/((1 - q*L0*L1^-1))");
  CHECK(to_text(qbinom(ctx, 1, Monomial::identity(*ctx))) == "1 - q");
  CHECK(to_text(Cyclotomic::root_of_unity(CyclotomicField::get(6), 1) * make_rational(-1, 2)) == "-1/2*z");
  CHECK(to_latex(qinv(ctx, 2, lam(ctx))) == "\\frac{1}{\\left(1 - q^{2}\\Lambda_{0}\\Lambda_{1}^{-1}\\right)}");
  CHECK(to_latex(make_rational(-3, 4)) == "-\\frac{3}{4}");
  CHECK(to_latex(PoleLocus{1, lam(ctx, make_rational(1, 2))}, 2) == "\\zeta_{2} \\Lambda_{0}^{1/2}\\Lambda_{1}^{-1/2}");
}

TEST_CASE("JSON schema") {
  auto ctx = session(1, 2);
  const Json f = json_of(qinv(ctx, 1, lam(ctx)).times(scalar(ctx, make_rational(1, 2))));
  REQUIRE(f["num"].is_array());
  CHECK(f["num"][0][0] == 0);
  CHECK(f["num"][0][1]["num"][0]["coeff"]["order"] == 2);
  CHECK(f["num"][0][1]["num"][0]["coeff"]["coeffs"][0] == "1/2");
  CHECK(f["den"][0]["a"] == 1);
  CHECK(f["den"][0]["mu"] == Json::array({"1", "-1"}));
  CHECK(f["den"][0]["mult"] == 1);
  CHECK(session_json(*ctx, 2) == Json{{"n", 1}, {"d", 2}, {"m", 2}});
  CHECK(json_of(make_rational(-2, 6)) == "-1/3");
}
