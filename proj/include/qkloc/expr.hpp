#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qkloc/kring.hpp"
#include "qkloc/qfunction.hpp"

namespace qkloc {

/// Parsed expression. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | atom ('^' power)?
///   power  := signed-int | '(' signed-int ('/' int)? ')'
///   atom   := int | 'q' | 'P' | 'z' | 'L' int | '(' expr ')'
/// `z` is the primitive M-th root of unity; fractional powers are only
/// meaningful on torus monomials.
struct ExprAst {
  enum class Kind { integer, q, hopf, zeta, lambda, neg, add, sub, mul, div, pow };

  Kind kind = Kind::integer;
  Integer value;       // integer literal
  int index = 0;       // lambda index
  Rational exponent;   // pow
  std::size_t position = 0;
  std::vector<ExprAst> children;
};

// Throws SyntaxError, UnknownVariable (a name other than q, P, z, L0..LN) or
// PowerNotInteger (a non-numeric or decimal exponent).
ExprAst parse_expr(std::string_view text, int dimension);

std::string ast_to_string(const ExprAst& ast);

enum class ValueKind { monomial, scalar, qfunction, ppolynomial };

// The narrowest kind the expression lowers to; TypeError if q and P are mixed.
ValueKind classify(const ExprAst& ast);

// Lowering passes; each throws TypeError on variables outside its kind and
// DomainError on divisors it cannot invert.
Monomial lower_monomial(const ExprAst& ast, const AlgebraContext& ctx);
TorusScalar lower_scalar(const ExprAst& ast, const ContextPtr& ctx);
QFunction lower_qfunction(const ExprAst& ast, const ContextPtr& ctx);
PPolynomial lower_ppolynomial(const ExprAst& ast, const ContextPtr& ctx);

}  // namespace qkloc
