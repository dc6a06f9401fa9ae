#pragma once

#include <string>

#include "qkloc/jfunction.hpp"

namespace qkloc {

// Text output is valid input for parse_expr in the same session.
std::string to_text(const Cyclotomic& c);
std::string to_text(const Monomial& m, int root_order);
std::string to_text(const LaurentPolynomial& p);
std::string to_text(const TorusScalar& s);
std::string to_text(const QFunction& f);
std::string to_text(const PPolynomial& p);
std::string to_text(const PQFunction& f);
std::string to_text(const PoleLocus& locus, int root_order);

std::string to_latex(const Rational& r);
std::string to_latex(const Cyclotomic& c);
std::string to_latex(const Monomial& m, int root_order);
std::string to_latex(const LaurentPolynomial& p);
std::string to_latex(const TorusScalar& s);
std::string to_latex(const QFunction& f);
std::string to_latex(const PPolynomial& p);
std::string to_latex(const PQFunction& f);
std::string to_latex(const PoleLocus& locus, int root_order);

}  // namespace qkloc
