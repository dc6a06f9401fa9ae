#pragma once

#include <optional>
#include <vector>

#include "qkloc/context.hpp"
#include "qkloc/cyclotomic.hpp"
#include "qkloc/monomial.hpp"

namespace qkloc {

enum class ArithOp { add, sub, mul };

/// Finite sum of Cyclotomic * Monomial. Terms are kept sorted by monomial
/// (lexicographic) with no zero coefficients, so equal values have equal
/// term vectors.
class LaurentPolynomial {
 public:
  struct Term {
    Monomial mono;
    Cyclotomic coeff;
  };

  explicit LaurentPolynomial(ContextPtr ctx);

  static LaurentPolynomial constant(ContextPtr ctx, const Rational& value);
  static LaurentPolynomial term(ContextPtr ctx, Monomial mono, Cyclotomic coeff);
  static LaurentPolynomial character(ContextPtr ctx, const Character& chi, const Rational& coeff = 1);
  // 1 - chi
  static LaurentPolynomial binomial(ContextPtr ctx, const Character& chi);
  static LaurentPolynomial from_terms(ContextPtr ctx, std::vector<Term> terms);

  const ContextPtr& context() const noexcept { return ctx_; }
  const AlgebraContext& session() const noexcept { return *ctx_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const;
  // The coefficient if this is a constant (identity monomial only, or zero).
  std::optional<Cyclotomic> as_constant() const;

  LaurentPolynomial operator-() const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial times(const Character& chi) const;
  LaurentPolynomial times(const Cyclotomic& c) const;
  LaurentPolynomial times(const Rational& c) const;
  LaurentPolynomial pow(unsigned k) const;

  // Quotient by (1 - y) when it divides exactly. Throws DomainError for y = 1.
  std::optional<LaurentPolynomial> try_divide_binomial(const Monomial& y) const;

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void check_session(const LaurentPolynomial& other) const;
  void add_scaled(const LaurentPolynomial& other, bool negate);

  ContextPtr ctx_;
  std::vector<Term> terms_;
};

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op);

std::optional<LaurentPolynomial> binomial_try_div(const LaurentPolynomial& p, const Monomial& factor);

}  // namespace qkloc
