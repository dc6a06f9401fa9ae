#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qkloc/laurent.hpp"

namespace qkloc {

/// A rational function on the torus: num / prod (1 - y)^k.
///
/// Denominator binomials are kept factored and never expanded. Each y is
/// oriented lex-positive ((1 - y^-1) is rewritten as -y^-1 (1 - y)), so the
/// same factor always has the same key. Roots of unity never appear in the
/// denominator: dividing by (1 - zeta^e y) multiplies the numerator by
/// 1 + chi + ... + chi^{n-1} and records (1 - y^n), n the order of zeta^e.
/// After every operation each factor is tried for cancellation against the
/// numerator; no GCDs are computed. Equality is decided by cross-multiplying.
class TorusScalar {
 public:
  using Denominator = std::map<Monomial, int>;

  explicit TorusScalar(ContextPtr ctx);
  explicit TorusScalar(LaurentPolynomial num);

  static TorusScalar constant(ContextPtr ctx, const Rational& value);
  static TorusScalar character(ContextPtr ctx, const Character& chi, const Rational& coeff = 1);
  // num / (den_unit * prod (1 - y)^k)
  static TorusScalar from_parts(LaurentPolynomial num, const Monomial& den_unit,
                                const std::vector<std::pair<Monomial, int>>& factors);
  // 1 / (1 - chi)^mult
  static TorusScalar binomial_inverse(ContextPtr ctx, const Character& chi, int mult = 1);

  const ContextPtr& context() const noexcept { return num_.context(); }
  const LaurentPolynomial& numerator() const noexcept { return num_; }
  const Denominator& denominator() const noexcept { return den_; }
  LaurentPolynomial expanded_denominator() const;

  bool is_zero() const noexcept { return num_.is_zero(); }
  // No denominator factors left.
  bool is_laurent() const noexcept { return den_.empty(); }

  TorusScalar operator-() const;
  TorusScalar& operator+=(const TorusScalar& other);
  TorusScalar& operator-=(const TorusScalar& other);
  TorusScalar& operator*=(const TorusScalar& other);
  friend TorusScalar operator+(TorusScalar a, const TorusScalar& b) { return a += b; }
  friend TorusScalar operator-(TorusScalar a, const TorusScalar& b) { return a -= b; }
  friend TorusScalar operator*(TorusScalar a, const TorusScalar& b) { return a *= b; }

  TorusScalar times(const Character& chi) const;
  TorusScalar times(const Cyclotomic& c) const;
  TorusScalar times(const Rational& c) const;
  TorusScalar pow(unsigned k) const;

  TorusScalar divided_by_binomial(const Character& chi, int mult = 1) const;

  // Requires the numerator to be a unit (one term) or a two-term binomial
  // unit * (1 - zeta^e y); anything else throws DomainError.
  TorusScalar inverse() const;
  friend TorusScalar operator/(const TorusScalar& a, const TorusScalar& b) { return a * b.inverse(); }

  // Value at Lambda_i = roots[i]^M (so Lambda_i^{1/M} = roots[i]). Only
  // defined when every cyclotomic coefficient is rational; throws DomainError
  // otherwise or when a denominator vanishes.
  Rational specialize(const std::vector<Rational>& roots) const;

 private:
  void add_factor(Monomial y, int mult);
  void cancel();
  static bool combine(TorusScalar& a, const TorusScalar& b, bool subtract, bool normalize);

  friend bool scalar_eq(const TorusScalar& a, const TorusScalar& b);

  LaurentPolynomial num_;
  Denominator den_;
};

// a * den(b) - b * den(a) expands to zero.
bool scalar_eq(const TorusScalar& a, const TorusScalar& b);

// Value of a Laurent polynomial at Lambda_i^{1/M} = roots[i].
Rational specialize(const LaurentPolynomial& p, const std::vector<Rational>& roots);

}  // namespace qkloc
