#include "qkloc/monomial.hpp"

#include <numeric>
#include <string>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

std::int32_t scale_exponent(const Rational& e, int root_order) {
  Rational scaled = e * root_order;
  if (scaled.get_den() != 1) {
    throw RootOrderExceeded("exponent " + to_string(e) + " needs a root order beyond " +
                            std::to_string(root_order));
  }
  return static_cast<std::int32_t>(scaled.get_num().get_si());
}

}  // namespace

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int root_of_unity_order(std::int64_t e, int root_order) {
  const std::int64_t r = mod_floor(e, root_order);
  return static_cast<int>(root_order / std::gcd<std::int64_t, std::int64_t>(r, root_order));
}

Monomial Monomial::variable(const AlgebraContext& ctx, int index, const Rational& power) {
  if (index < 0 || index >= ctx.num_vars()) {
    throw DomainError("variable index " + std::to_string(index) + " outside 0.." +
                      std::to_string(ctx.dimension()));
  }
  Monomial m(ctx.num_vars());
  m.scaled_[static_cast<std::size_t>(index)] = scale_exponent(power, ctx.root_order());
  return m;
}

Monomial Monomial::ratio(const AlgebraContext& ctx, int i, int j) {
  return variable(ctx, i) * variable(ctx, j, -1);
}

Monomial Monomial::from_exponents(const AlgebraContext& ctx, const std::vector<Rational>& exponents) {
  if (static_cast<int>(exponents.size()) != ctx.num_vars()) {
    throw ConfigurationError("monomial has " + std::to_string(exponents.size()) +
                             " exponents, session expects " + std::to_string(ctx.num_vars()));
  }
  Monomial m(ctx.num_vars());
  for (std::size_t i = 0; i < exponents.size(); ++i) m.scaled_[i] = scale_exponent(exponents[i], ctx.root_order());
  return m;
}

Rational Monomial::exponent(std::size_t i, int root_order) const {
  Rational r(scaled_[i], root_order);
  r.canonicalize();
  return r;
}

bool Monomial::is_identity() const noexcept {
  for (auto e : scaled_)
    if (e != 0) return false;
  return true;
}

bool Monomial::lex_positive() const noexcept {
  for (auto e : scaled_) {
    if (e != 0) return e > 0;
  }
  return false;
}

Monomial Monomial::inverse() const {
  Monomial r(*this);
  for (auto& e : r.scaled_) e = -e;
  return r;
}

Monomial Monomial::pow(std::int64_t k) const {
  Monomial r(*this);
  for (auto& e : r.scaled_) e = static_cast<std::int32_t>(e * k);
  return r;
}

std::optional<Monomial> Monomial::root(int a) const {
  Monomial r(*this);
  for (auto& e : r.scaled_) {
    if (e % a != 0) return std::nullopt;
    e /= a;
  }
  return r;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  if (other.scaled_.size() != scaled_.size()) {
    throw ConfigurationError("monomials over different variable counts combined");
  }
  for (std::size_t i = 0; i < scaled_.size(); ++i) scaled_[i] += other.scaled_[i];
  return *this;
}

Character Character::make(const AlgebraContext& ctx, std::int64_t zeta, Monomial m) {
  return Character{mod_floor(zeta, ctx.root_order()), std::move(m)};
}

Character Character::times(const Character& other, int root_order) const {
  return Character{mod_floor(zeta + other.zeta, root_order), mono * other.mono};
}

Character Character::pow(std::int64_t k, int root_order) const {
  return Character{mod_floor(zeta * k, root_order), mono.pow(k)};
}

Character Character::inverse(int root_order) const { return pow(-1, root_order); }

}  // namespace qkloc
