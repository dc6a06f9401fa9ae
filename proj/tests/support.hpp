#pragma once

#include <random>

#include "qkloc/qfunction.hpp"

namespace qkloc::testing {

inline ContextPtr session(int n, int m) { return AlgebraContext::create(n, m); }

inline TorusScalar scalar(const ContextPtr& ctx, const Rational& v) { return TorusScalar::constant(ctx, v); }

// Lambda_0^{e_0} ... as a torus scalar.
inline TorusScalar mono(const ContextPtr& ctx, std::vector<Rational> exps, const Rational& coeff = 1) {
  return TorusScalar::character(ctx, Character::of(Monomial::from_exponents(*ctx, exps)), coeff);
}

// (Lambda_0 / Lambda_1)^power
inline Monomial lam(const ContextPtr& ctx, const Rational& power = 1) {
  std::vector<Rational> e(static_cast<std::size_t>(ctx->num_vars()), Rational(0));
  e[0] = power;
  e[1] = -power;
  return Monomial::from_exponents(*ctx, e);
}

// 1 - chi as a torus scalar.
inline TorusScalar one_minus(const ContextPtr& ctx, const Monomial& y) {
  return TorusScalar(LaurentPolynomial::binomial(ctx, Character::of(y)));
}

inline QFunction qconst(const TorusScalar& c) { return QFunction(c); }

// (1 - q^a mu) as a q-function.
inline QFunction qbinom(const ContextPtr& ctx, int a, const Monomial& mu) {
  return QFunction::binomial(ctx, a, Character::of(mu));
}

inline QFunction qinv(const ContextPtr& ctx, int a, const Monomial& mu, int mult = 1) {
  return QFunction::factor_inverse(ctx, a, Character::of(mu), mult);
}

}  // namespace qkloc::testing
