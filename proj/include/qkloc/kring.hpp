#pragma once

#include <vector>

#include "qkloc/torus_scalar.hpp"

namespace qkloc {

/// A class in K_T(CP^N) by its restrictions to the N+1 fixed points.
class KClass {
 public:
  explicit KClass(ContextPtr ctx);
  KClass(ContextPtr ctx, std::vector<TorusScalar> components);

  // 1 at fixed point i, 0 elsewhere.
  static KClass delta(ContextPtr ctx, int i);
  static KClass constant(ContextPtr ctx, const TorusScalar& value);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::vector<TorusScalar>& components() const noexcept { return components_; }
  const TorusScalar& operator[](std::size_t i) const { return components_[i]; }

  KClass& operator+=(const KClass& other);
  KClass& operator*=(const KClass& other);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator*(KClass a, const KClass& b) { return a *= b; }

  bool is_zero() const;
  friend bool kclass_eq(const KClass& a, const KClass& b);

 private:
  ContextPtr ctx_;
  std::vector<TorusScalar> components_;
};

bool kclass_eq(const KClass& a, const KClass& b);

/// sum_k c_k P^k with deg <= N, the canonical representative modulo
/// prod_i (1 - P/Lambda_i).
class PPolynomial {
 public:
  explicit PPolynomial(ContextPtr ctx);
  // Reduces arbitrary-degree coefficients modulo the ring relation.
  PPolynomial(ContextPtr ctx, std::vector<TorusScalar> coeffs);

  static PPolynomial constant(const TorusScalar& c);
  // The Hopf bundle P.
  static PPolynomial hopf(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  // Always N+1 entries.
  const std::vector<TorusScalar>& coeffs() const noexcept { return coeffs_; }

  PPolynomial operator-() const;
  PPolynomial& operator+=(const PPolynomial& other);
  PPolynomial& operator-=(const PPolynomial& other);
  PPolynomial& operator*=(const PPolynomial& other);
  friend PPolynomial operator+(PPolynomial a, const PPolynomial& b) { return a += b; }
  friend PPolynomial operator-(PPolynomial a, const PPolynomial& b) { return a -= b; }
  friend PPolynomial operator*(PPolynomial a, const PPolynomial& b) { return a *= b; }
  PPolynomial times(const TorusScalar& c) const;

  // Value at P = Lambda_i.
  TorusScalar at_fixed_point(int i) const;
  bool is_zero() const;
  friend bool ppoly_eq(const PPolynomial& a, const PPolynomial& b);

 private:
  ContextPtr ctx_;
  std::vector<TorusScalar> coeffs_;
};

bool ppoly_eq(const PPolynomial& a, const PPolynomial& b);

// Coefficients of prod_i (1 - P/Lambda_i), degree N+1.
std::vector<TorusScalar> ring_relation(const ContextPtr& ctx);

// Reduces a coefficient list of any length modulo the ring relation to N+1 entries.
std::vector<TorusScalar> reduce_mod_relation(const ContextPtr& ctx, std::vector<TorusScalar> coeffs);

// prod_{j != i} (1 - Lambda_i/Lambda_j). Throws DomainError if i is out of range.
TorusScalar phi_value(const ContextPtr& ctx, int i);

KClass p_to_phi(const PPolynomial& p);
PPolynomial phi_to_p(const KClass& k);

}  // namespace qkloc
