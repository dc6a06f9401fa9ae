#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qkloc/exec.hpp"
#include "qkloc/jfunction.hpp"

namespace qkloc {

/// A leg of multiplicity m joining fixed points i and j.
struct LegSpec {
  int i = 0;
  int j = 1;
  int m = 1;
};

// Throws DomainError unless i != j are valid indices and m >= 1.
void validate_leg(const AlgebraContext& ctx, const LegSpec& leg);

// Lambda_a Lambda_i^{-r/m} Lambda_j^{-s/m} for r + s = m, without the two
// trivial entries; (N+1)(m+1) - 2 values in (a, r) order.
std::vector<Monomial> tangent_eigenvalues(const ContextPtr& ctx, const LegSpec& leg);

// The same eigenvalues at branch k, twisted by zeta_m^{k s}.
std::vector<Character> tangent_characters(const ContextPtr& ctx, const LegSpec& leg, int branch = 0);

enum class CMethod { product, tangent };

// C_ij(m). Throws RootOrderExceeded unless m divides M.
TorusScalar c_coeff(const ContextPtr& ctx, const LegSpec& leg, CMethod method);
// 1 / C_ij(m) at branch k, as a product of inverted binomials.
TorusScalar c_coeff_inverse(const ContextPtr& ctx, const LegSpec& leg, int branch = 0);

struct RecursionEntry {
  int degree = 0;
  TorusScalar lhs;
  TorusScalar rhs;
  bool pass = false;
  std::string note;
};

struct RecursionReport {
  LegSpec leg;
  std::vector<RecursionEntry> entries;
  bool pass = true;
};

// Res_{q = lambda^{-1/m}} f^(i)_d dq/q against -(1/m)(phi^i / C_ij(m)) f^(j)_{d-m}(lambda^{-1/m})
// for m <= d <= D.
RecursionReport verify_recursion(const JBundle& series, const LegSpec& leg);

// Throws UnsupportedOrder if a component has a repeated pole away from the roots of unity.
void check_pole_simplicity(const JBundle& series);

struct PolePart {
  LegSpec leg;
  QFunction part;  // denominator (1 - q^m Lambda_i/Lambda_j)
};

// Fractions of f^(i)_d at the roots of (1 - q^m Lambda_i/Lambda_j), summed over
// the m branches, from the components of degree < d.
std::vector<PolePart> extract_pole_part(const JBundle& series, int i, int d);

/// Supplies the roots-of-unity pole part of f^(i) at Q-degree d.
class VertexOracle {
 public:
  virtual ~VertexOracle() = default;
  // `known` holds every component through degree d-1; `extracted` is the sum
  // of the non-unity pole parts at degree d.
  virtual QFunction unity_part(int i, int d, const JBundle& known, const QFunction& extracted) const = 0;
};

/// Reads the roots-of-unity fractions off the closed-form series.
class ReferenceOracle final : public VertexOracle {
 public:
  explicit ReferenceOracle(JBundle series);
  QFunction unity_part(int i, int d, const JBundle& known, const QFunction& extracted) const override;

 private:
  JBundle series_;
};

// Degree 0 is 1 - q; each later degree is its extracted pole parts plus the
// oracle's unity part, with zero Laurent part.
JBundle reconstruct(const ContextPtr& ctx, int max_degree, const VertexOracle& oracle, Exec exec = Exec::parallel);

// sum_i Lambda_i^k / prod_{j != i} (1 - Lambda_i/Lambda_j)
TorusScalar lefschetz_trace(const ContextPtr& ctx, int k);
// Res_{P=0} + Res_{P=infinity} of P^k / prod_i (1 - P/Lambda_i) dP/P from the two Laurent expansions.
TorusScalar lefschetz_residue_form(const ContextPtr& ctx, int k);

struct Degree2Options {
  // Index 0..4 of a coefficient to perturb by +1.
  std::optional<int> tamper;
};

struct Degree2Report {
  bool identity_holds = false;     // sum of the five fractions equals the left side
  bool decomposition_matches = false;  // qf_partial_fractions returns the same coefficients
  bool specialized_holds = false;  // lambda = 4 check over Q
  std::vector<Rational> specialized_coeffs;
  bool pass() const { return identity_holds && decomposition_matches && specialized_holds; }
};

Degree2Report verify_degree2_example(const Degree2Options& options = {});

}  // namespace qkloc
