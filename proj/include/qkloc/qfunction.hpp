#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qkloc/torus_scalar.hpp"

namespace qkloc {

/// (1 - q^a mu), a >= 1.
struct QFactor {
  int a = 1;
  Monomial mu;

  friend auto operator<=>(const QFactor&, const QFactor&) = default;
  friend bool operator==(const QFactor&, const QFactor&) = default;
};

/// A rational function of q with torus-scalar coefficients:
///   sum_p c_p q^p / prod (1 - q^a mu)^k.
/// The numerator is a Laurent polynomial in q. Denominator factors carry pure
/// monomials; a root-of-unity twisted factor (1 - q^a zeta^e mu) is
/// rationalized on the way in. Representations are not reduced, but every
/// operation tries each denominator factor for cancellation in canonical order.
class QFunction {
 public:
  using Numerator = std::map<int, TorusScalar>;
  using Denominator = std::map<QFactor, int>;

  explicit QFunction(ContextPtr ctx);
  explicit QFunction(const TorusScalar& constant);

  // c * q^p
  static QFunction monomial(const TorusScalar& c, int p);
  static QFunction q_power(ContextPtr ctx, int p);
  // 1 - q^a chi
  static QFunction binomial(ContextPtr ctx, int a, const Character& chi);
  // 1 / (1 - q^a chi)^mult
  static QFunction factor_inverse(ContextPtr ctx, int a, const Character& chi, int mult = 1);
  static QFunction from_parts(ContextPtr ctx, Numerator num, Denominator den);

  const ContextPtr& context() const noexcept { return ctx_; }
  const Numerator& numerator() const noexcept { return num_; }
  const Denominator& denominator() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.empty(); }
  // No denominator: a Laurent polynomial in q.
  bool is_laurent() const noexcept { return den_.empty(); }
  // Lowest and highest numerator q-power; nullopt for zero.
  std::optional<std::pair<int, int>> numerator_range() const;
  TorusScalar coefficient(int p) const;

  QFunction operator-() const;
  QFunction& operator+=(const QFunction& other);
  QFunction& operator-=(const QFunction& other);
  QFunction& operator*=(const QFunction& other);
  friend QFunction operator+(QFunction a, const QFunction& b) { return a += b; }
  friend QFunction operator-(QFunction a, const QFunction& b) { return a -= b; }
  friend QFunction operator*(QFunction a, const QFunction& b) { return a *= b; }

  QFunction times(const TorusScalar& c) const;
  QFunction times_q(int p) const;
  QFunction pow(unsigned k) const;
  QFunction divided_by_factor(int a, const Character& chi, int mult = 1) const;
  // Removes one copy of a denominator factor, i.e. multiplies by (1 - q^a mu).
  QFunction without_factor(const QFactor& factor) const;

  // Inverse when the numerator is c q^p or a binomial c q^p (1 - q^b chi)
  // with invertible c; throws DomainError otherwise.
  QFunction inverse() const;
  friend QFunction operator/(const QFunction& a, const QFunction& b) { return a * b.inverse(); }

  // Numerator expanded over the (expanded) denominator is identically zero.
  friend bool qf_eq(const QFunction& f, const QFunction& g);

 private:
  void add_factor(const QFactor& factor, int mult);
  void cancel();
  void prune();
  static bool combine(QFunction& a, const QFunction& b, bool subtract, bool normalize);

  ContextPtr ctx_;
  Numerator num_;
  Denominator den_;
};

bool qf_eq(const QFunction& f, const QFunction& g);

QFunction qf_arith(const QFunction& f, const QFunction& g, ArithOp op);

/// Linear pole base nu = zeta_M^zeta_exp * root; 1/(1 - q nu)^k has its pole
/// at q = nu^-1.
struct PoleLocus {
  std::int64_t zeta_exp = 0;
  Monomial root;

  Character base() const { return Character{zeta_exp, root}; }
  // q0 = nu^-1
  Character pole_point(int root_order) const { return base().inverse(root_order); }
  bool is_root_of_unity() const noexcept { return root.is_identity(); }

  friend auto operator<=>(const PoleLocus&, const PoleLocus&) = default;
  friend bool operator==(const PoleLocus&, const PoleLocus&) = default;
};

// The principal locus of (1 - q^a mu): zeta_exp = 0, root = mu^{1/a}.
PoleLocus principal_locus(const AlgebraContext& ctx, int a, const Monomial& mu);
// All a loci of (1 - q^a mu); throws RootOrderExceeded if a does not divide M
// or mu^{1/a} leaves the exponent lattice.
std::vector<PoleLocus> split_factor(const AlgebraContext& ctx, int a, const Monomial& mu);

// f(q0). Throws PoleHit if a denominator factor vanishes at q0.
TorusScalar qf_eval(const QFunction& f, const Character& q0);

// Res_{q = nu^-1} f dq/q for a simple pole.
TorusScalar qf_residue(const QFunction& f, const PoleLocus& at);

struct FractionTerm {
  PoleLocus locus;
  int order = 1;
  TorusScalar coeff;  // coefficient of 1 / (1 - q nu)^order
};

struct PartialFractionForm {
  QFunction laurent_part;
  std::vector<FractionTerm> fraction_terms;

  QFunction recombine() const;
};

// 1 / (1 - q nu)^order as a QFunction.
QFunction elementary_fraction(ContextPtr ctx, const PoleLocus& locus, int order);

PartialFractionForm qf_partial_fractions(const QFunction& f);

// The Laurent-polynomial (K+) part: principal part at q=0 plus polynomial
// part at q=infinity. Needs no root extraction.
QFunction qf_laurent_part(const QFunction& f);

struct KpmSplit {
  QFunction kplus;   // Laurent polynomial in q
  QFunction kminus;  // regular at 0, vanishing at infinity
};

KpmSplit qf_split_kpm(const QFunction& f);

}  // namespace qkloc
