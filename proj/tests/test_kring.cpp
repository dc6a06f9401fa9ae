#include "doctest.h"
#include "qkloc/errors.hpp"
#include "qkloc/kring.hpp"
#include "support.hpp"

using namespace qkloc;
using namespace qkloc::testing;

namespace {

TorusScalar lv(const ContextPtr& ctx, int i, int k = 1) {
  return TorusScalar::character(ctx, Character::of(Monomial::variable(*ctx, i, k)));
}

}  // namespace

TEST_CASE("phi_value examples") {
  auto c1 = session(1, 1);
  CHECK(scalar_eq(phi_value(c1, 0), one_minus(c1, Monomial::ratio(*c1, 0, 1))));
  CHECK(scalar_eq(phi_value(c1, 1), one_minus(c1, Monomial::ratio(*c1, 1, 0))));
  auto c2 = session(2, 1);
  CHECK(scalar_eq(phi_value(c2, 0), one_minus(c2, Monomial::ratio(*c2, 0, 1)) * one_minus(c2, Monomial::ratio(*c2, 0, 2))));
  CHECK_THROWS_AS(phi_value(c2, 3), DomainError);
  CHECK_THROWS_AS(phi_value(c2, -1), DomainError);
}

TEST_CASE("p_to_phi examples") {
  auto ctx = session(1, 1);
  CHECK(kclass_eq(p_to_phi(PPolynomial::constant(scalar(ctx, 1))), KClass::constant(ctx, scalar(ctx, 1))));
  CHECK(kclass_eq(p_to_phi(PPolynomial::hopf(ctx)), KClass(ctx, {lv(ctx, 0), lv(ctx, 1)})));
  const TorusScalar inv = (lv(ctx, 0) - lv(ctx, 1)).inverse();
  const PPolynomial lagrange = (PPolynomial::hopf(ctx) - PPolynomial::constant(lv(ctx, 1))).times(inv);
  CHECK(kclass_eq(p_to_phi(lagrange), KClass::delta(ctx, 0)));
}

TEST_CASE("phi_to_p examples") {
  auto ctx = session(1, 1);
  CHECK(ppoly_eq(phi_to_p(KClass::constant(ctx, scalar(ctx, 1))), PPolynomial::constant(scalar(ctx, 1))));
  CHECK(ppoly_eq(phi_to_p(KClass(ctx, {lv(ctx, 0), lv(ctx, 1)})), PPolynomial::hopf(ctx)));
  const TorusScalar inv = (lv(ctx, 0) - lv(ctx, 1)).inverse();
  const PPolynomial lagrange = (PPolynomial::hopf(ctx) - PPolynomial::constant(lv(ctx, 1))).times(inv);
  CHECK(ppoly_eq(phi_to_p(KClass::delta(ctx, 0)), lagrange));
}

TEST_CASE("the ring relation vanishes") {
  for (int n = 0; n <= 3; ++n) {
    auto ctx = session(n, 1);
    PPolynomial prod = PPolynomial::constant(scalar(ctx, 1));
    for (int i = 0; i < ctx->num_vars(); ++i)
      prod *= PPolynomial::constant(scalar(ctx, 1)) - PPolynomial::hopf(ctx).times(lv(ctx, i, -1));
    CHECK(prod.is_zero());
    CHECK(p_to_phi(prod).is_zero());
    const auto rel = ring_relation(ctx);
    CHECK(rel.size() == static_cast<std::size_t>(n + 2));
    for (int i = 0; i <= n; ++i) {
      TorusScalar v(ctx);
      for (std::size_t k = 0; k < rel.size(); ++k) v += rel[k] * lv(ctx, i, static_cast<int>(k));
      CHECK(scalar_eq(v, TorusScalar(ctx)));
    }
  }
}

TEST_CASE("delta interpolants resum to one") {
  for (int n = 0; n <= 3; ++n) {
    auto ctx = session(n, 1);
    PPolynomial sum(ctx);
    for (int i = 0; i <= n; ++i) sum += phi_to_p(KClass::delta(ctx, i));
    CHECK(ppoly_eq(sum, PPolynomial::constant(scalar(ctx, 1))));
  }
}

TEST_CASE("session mismatch is rejected") {
  CHECK_THROWS_AS(PPolynomial::hopf(session(1, 1)) + PPolynomial::hopf(session(2, 1)), ConfigurationError);
  CHECK_THROWS_AS(KClass(session(1, 1), {scalar(session(1, 1), 1)}), ConfigurationError);
}
