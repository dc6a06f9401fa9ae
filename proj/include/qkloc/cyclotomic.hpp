#pragma once

#include <span>
#include <utility>
#include <vector>

#include "qkloc/rational.hpp"

namespace qkloc {

// Integer coefficients of the M-th cyclotomic polynomial, lowest degree first.
std::vector<long long> cyclotomic_polynomial(int order);

int euler_phi(int n);

/// Arithmetic data of Q(zeta_M): the modulus Phi_M and the reduced images of
/// x^k used when folding products back to degree < phi(M).
///
/// Fields are memoized process-wide; `get` is safe to call from several
/// threads and the returned reference stays valid for the program lifetime.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int order);

  int order() const noexcept { return order_; }
  int degree() const noexcept { return degree_; }
  const std::vector<long long>& modulus() const noexcept { return modulus_; }

  // x^k mod Phi_M for 0 <= k < 2*degree - 1 (used by multiplication).
  const std::vector<long long>& reduced_power(int k) const { return powers_[static_cast<std::size_t>(k)]; }
  // zeta^k for any integer k.
  const std::vector<long long>& root_power(long long k) const;

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<long long> modulus_;
  std::vector<std::vector<long long>> powers_;  // indices 0 .. max(order, 2*degree-1)
};

/// An element of Q(zeta_M) stored as its canonical residue modulo Phi_M.
class Cyclotomic {
 public:
  explicit Cyclotomic(const CyclotomicField& field);
  Cyclotomic(const CyclotomicField& field, const Rational& value);

  static Cyclotomic root_of_unity(const CyclotomicField& field, long long k);

  const CyclotomicField& field() const noexcept { return *field_; }
  int order() const noexcept { return field_->order(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when the value lies in Q (only the constant coefficient may be nonzero).
  bool is_rational() const;
  const Rational& constant_term() const { return coeffs_.front(); }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& other);
  Cyclotomic& operator-=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Cyclotomic& other);
  Cyclotomic& operator*=(const Rational& r);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& b) { return a *= b; }

  // Multiplies by zeta^k.
  Cyclotomic times_root(long long k) const;

  // Throws DomainError on zero.
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(const CyclotomicField& field, std::vector<Rational> coeffs);
  void check_field(const Cyclotomic& other) const;

  const CyclotomicField* field_;
  std::vector<Rational> coeffs_;
};

/// Canonical representative of sum coeff * zeta_M^power.
Cyclotomic cyc_reduce(std::span<const std::pair<long long, Rational>> raw, int order);

}  // namespace qkloc
