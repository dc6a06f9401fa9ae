#pragma once

#include <map>
#include <vector>

#include "qkloc/exec.hpp"
#include "qkloc/kring.hpp"
#include "qkloc/qfunction.hpp"

namespace qkloc {

/// Q-degree coefficients 0..truncation of one fixed-point component.
struct NovikovSeries {
  int truncation = 0;
  std::vector<QFunction> coeffs;

  const QFunction& at(int d) const { return coeffs.at(static_cast<std::size_t>(d)); }
};

/// J = sum_i J^(i) phi_i, every component truncated at the same Q-degree.
struct JBundle {
  ContextPtr ctx;
  int truncation = 0;
  std::vector<NovikovSeries> components;

  const QFunction& at(int i, int d) const { return components.at(static_cast<std::size_t>(i)).at(d); }
};

bool jbundle_eq(const JBundle& a, const JBundle& b);

// (1 - q) / (prod_r (1 - q^r) prod_{j != i} prod_r (1 - q^r Lambda_i/Lambda_j)),
// r = 1..d, with the (1 - q) cancelled for d >= 1.
QFunction j_coeff(const ContextPtr& ctx, int i, int d);

// Throws RootOrderExceeded unless lcm(1..D) divides M.
JBundle j_series(const ContextPtr& ctx, int max_degree, Exec exec = Exec::parallel);

/// sum_p q^p c_p(P) / prod (1 - q^a mu)^k with c_p reduced modulo the ring relation.
struct PQFunction {
  ContextPtr ctx;
  std::map<int, PPolynomial> num;
  QFunction::Denominator den;

  // Restriction to the fixed point P = Lambda_i.
  QFunction restrict_to(int i) const;
};

// The P-form of the degree-d coefficient, inverted in K_T(CP^N) through the
// adjugate of multiplication by D(P) = prod_i prod_r (1 - q^r P/Lambda_i).
PQFunction j_in_p_basis(const ContextPtr& ctx, int d);

}  // namespace qkloc
