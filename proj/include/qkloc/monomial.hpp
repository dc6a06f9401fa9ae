#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstdint>
#include <optional>

#include "qkloc/context.hpp"
#include "qkloc/rational.hpp"

namespace qkloc {

/// Lambda_0^{e_0} ... Lambda_N^{e_N} with exponents in (1/M)Z, stored as the
/// integers M*e_i. Ordering is lexicographic on the exponent vector.
class Monomial {
 public:
  using Storage = boost::container::small_vector<std::int32_t, 4>;

  Monomial() = default;
  explicit Monomial(int num_vars) : scaled_(static_cast<std::size_t>(num_vars), 0) {}
  explicit Monomial(Storage scaled) : scaled_(std::move(scaled)) {}

  static Monomial identity(const AlgebraContext& ctx) { return Monomial(ctx.num_vars()); }
  // Lambda_index^power; the power's denominator must divide M.
  static Monomial variable(const AlgebraContext& ctx, int index, const Rational& power = 1);
  // Lambda_i / Lambda_j.
  static Monomial ratio(const AlgebraContext& ctx, int i, int j);
  static Monomial from_exponents(const AlgebraContext& ctx, const std::vector<Rational>& exponents);

  std::size_t size() const noexcept { return scaled_.size(); }
  std::int32_t scaled(std::size_t i) const { return scaled_[i]; }
  const Storage& scaled() const noexcept { return scaled_; }
  Rational exponent(std::size_t i, int root_order) const;

  bool is_identity() const noexcept;
  // First nonzero exponent is positive.
  bool lex_positive() const noexcept;

  Monomial inverse() const;
  Monomial pow(std::int64_t k) const;
  // The a-th root with every exponent divided by a; nullopt if off the lattice.
  std::optional<Monomial> root(int a) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a *= b.inverse(); }

  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.scaled_.begin(), a.scaled_.end(),
                                                  b.scaled_.begin(), b.scaled_.end());
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.scaled_ == b.scaled_; }

 private:
  Storage scaled_;
};

/// zeta_M^zeta * mono, a torus character twisted by a root of unity.
struct Character {
  std::int64_t zeta = 0;  // kept in [0, M)
  Monomial mono;

  static Character of(const Monomial& m) { return Character{0, m}; }
  static Character make(const AlgebraContext& ctx, std::int64_t zeta, Monomial m);

  bool is_identity() const noexcept { return zeta == 0 && mono.is_identity(); }
  Character times(const Character& other, int root_order) const;
  Character pow(std::int64_t k, int root_order) const;
  Character inverse(int root_order) const;

  friend auto operator<=>(const Character&, const Character&) = default;
  friend bool operator==(const Character&, const Character&) = default;
};

std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// Multiplicative order of zeta_M^e.
int root_of_unity_order(std::int64_t e, int root_order);

}  // namespace qkloc
