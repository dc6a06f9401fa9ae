#include "qkloc/torus_scalar.hpp"

#include <string>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

LaurentPolynomial binomial_power(const ContextPtr& ctx, const Monomial& y, int k) {
  return LaurentPolynomial::binomial(ctx, Character::of(y)).pow(static_cast<unsigned>(k));
}

// Finds e with zeta^e == c, if c is a root of unity.
std::optional<std::int64_t> as_root_of_unity(const Cyclotomic& c) {
  const auto& field = c.field();
  for (int e = 0; e < field.order(); ++e) {
    if (Cyclotomic::root_of_unity(field, e) == c) return e;
  }
  return std::nullopt;
}

Rational rational_power(const Rational& base, std::int64_t k) {
  Rational r(1);
  Rational b = k >= 0 ? base : Rational(1) / base;
  for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) r *= b;
  return r;
}

}  // namespace

TorusScalar::TorusScalar(ContextPtr ctx) : num_(std::move(ctx)) {}

TorusScalar::TorusScalar(LaurentPolynomial num) : num_(std::move(num)) {}

TorusScalar TorusScalar::constant(ContextPtr ctx, const Rational& value) {
  return TorusScalar(LaurentPolynomial::constant(std::move(ctx), value));
}

TorusScalar TorusScalar::character(ContextPtr ctx, const Character& chi, const Rational& coeff) {
  return TorusScalar(LaurentPolynomial::character(std::move(ctx), chi, coeff));
}

TorusScalar TorusScalar::from_parts(LaurentPolynomial num, const Monomial& den_unit,
                                    const std::vector<std::pair<Monomial, int>>& factors) {
  TorusScalar s(num.times(Character::of(den_unit.inverse())));
  for (const auto& [y, k] : factors) {
    if (k < 1) throw DomainError("denominator multiplicity must be positive");
    s.add_factor(y, k);
  }
  s.cancel();
  return s;
}

TorusScalar TorusScalar::binomial_inverse(ContextPtr ctx, const Character& chi, int mult) {
  return constant(std::move(ctx), 1).divided_by_binomial(chi, mult);
}

void TorusScalar::add_factor(Monomial y, int mult) {
  if (y.is_identity()) throw DomainError("denominator factor (1 - 1) vanishes");
  if (!y.lex_positive()) {
    // 1/(1 - y) = -y^-1 / (1 - y^-1)
    y = y.inverse();
    num_ = num_.times(Character::of(y.pow(mult)));
    if (mult % 2 != 0) num_ = -num_;
  }
  den_[y] += mult;
}

void TorusScalar::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = num_.try_divide_binomial(it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

LaurentPolynomial TorusScalar::expanded_denominator() const {
  LaurentPolynomial d = LaurentPolynomial::constant(context(), 1);
  for (const auto& [y, k] : den_) d = d * binomial_power(context(), y, k);
  return d;
}

TorusScalar TorusScalar::operator-() const {
  TorusScalar r(*this);
  r.num_ = -r.num_;
  return r;
}

bool TorusScalar::combine(TorusScalar& a, const TorusScalar& b, bool subtract, bool normalize) {
  if (b.num_.is_zero()) return a.num_.is_zero();
  if (a.num_.is_zero()) {
    a = subtract ? -b : b;
    return false;
  }
  if (a.den_ == b.den_) {
    if (subtract) a.num_ -= b.num_; else a.num_ += b.num_;
  } else {
    // Common denominator: per-factor maximum multiplicity.
    Denominator common = a.den_;
    for (const auto& [y, k] : b.den_) {
      auto& slot = common[y];
      slot = std::max(slot, k);
    }
    LaurentPolynomial lhs = a.num_;
    LaurentPolynomial rhs = b.num_;
    for (const auto& [y, k] : common) {
      auto ia = a.den_.find(y);
      const int ka = ia == a.den_.end() ? 0 : ia->second;
      if (k > ka) lhs = lhs * binomial_power(a.context(), y, k - ka);
      auto ib = b.den_.find(y);
      const int kb = ib == b.den_.end() ? 0 : ib->second;
      if (k > kb) rhs = rhs * binomial_power(a.context(), y, k - kb);
    }
    a.num_ = subtract ? lhs - rhs : lhs + rhs;
    a.den_ = std::move(common);
  }
  if (normalize) a.cancel();
  return a.num_.is_zero();
}

TorusScalar& TorusScalar::operator+=(const TorusScalar& other) {
  combine(*this, other, false, true);
  return *this;
}

TorusScalar& TorusScalar::operator-=(const TorusScalar& other) {
  combine(*this, other, true, true);
  return *this;
}

TorusScalar& TorusScalar::operator*=(const TorusScalar& other) {
  if (num_.is_zero()) return *this;
  if (other.num_.is_zero()) {
    num_ = other.num_;
    den_.clear();
    return *this;
  }
  num_ = num_ * other.num_;
  for (const auto& [y, k] : other.den_) den_[y] += k;
  if (!other.den_.empty() || den_.size() > 0) cancel();
  return *this;
}

TorusScalar TorusScalar::times(const Character& chi) const {
  TorusScalar r(*this);
  r.num_ = r.num_.times(chi);
  return r;
}

TorusScalar TorusScalar::times(const Cyclotomic& c) const {
  TorusScalar r(*this);
  r.num_ = r.num_.times(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

TorusScalar TorusScalar::times(const Rational& c) const {
  TorusScalar r(*this);
  r.num_ = r.num_.times(c);
  if (r.num_.is_zero()) r.den_.clear();
  return r;
}

TorusScalar TorusScalar::pow(unsigned k) const {
  TorusScalar result = constant(context(), 1);
  for (unsigned i = 0; i < k; ++i) result *= *this;
  return result;
}

TorusScalar TorusScalar::divided_by_binomial(const Character& chi, int mult) const {
  const auto& ctx = context();
  const int order = ctx->root_order();
  if (chi.is_identity()) throw DomainError("division by (1 - 1) = 0");
  TorusScalar r(*this);
  if (r.num_.is_zero()) return r;
  if (chi.mono.is_identity()) {
    // (1 - zeta^e) is a nonzero constant of Q(zeta).
    const Cyclotomic c = (Cyclotomic(ctx->field(), 1) - Cyclotomic::root_of_unity(ctx->field(), chi.zeta)).inverse();
    for (int i = 0; i < mult; ++i) r.num_ = r.num_.times(c);
    return r;
  }
  const int n = root_of_unity_order(chi.zeta, order);
  if (n > 1) {
    // 1/(1 - chi) = (1 + chi + ... + chi^{n-1}) / (1 - y^n)
    std::vector<LaurentPolynomial::Term> geo;
    for (int t = 0; t < n; ++t) {
      const Character p = chi.pow(t, order);
      geo.push_back({p.mono, Cyclotomic::root_of_unity(ctx->field(), p.zeta)});
    }
    const LaurentPolynomial g = LaurentPolynomial::from_terms(ctx, std::move(geo));
    for (int i = 0; i < mult; ++i) r.num_ = r.num_ * g;
  }
  r.add_factor(chi.mono.pow(n), mult);
  r.cancel();
  return r;
}

TorusScalar TorusScalar::inverse() const {
  const auto& ctx = context();
  const auto& terms = num_.terms();
  if (terms.empty()) throw DomainError("inverse of zero torus scalar");
  TorusScalar result(expanded_denominator());
  if (terms.size() == 1) {
    result.num_ = result.num_.times(terms[0].coeff.inverse()).times(Character::of(terms[0].mono.inverse()));
    return result;
  }
  if (terms.size() == 2) {
    // c1 m1 + c2 m2 = c1 m1 (1 - zeta^e m2/m1) with zeta^e = -c2/c1.
    const Cyclotomic c1_inv = terms[0].coeff.inverse();
    const auto e = as_root_of_unity(-(terms[1].coeff * c1_inv));
    if (e) {
      result.num_ = result.num_.times(c1_inv).times(Character::of(terms[0].mono.inverse()));
      return result.divided_by_binomial(Character::make(*ctx, *e, terms[1].mono / terms[0].mono));
    }
  }
  throw DomainError("numerator does not factor into a unit times a binomial; cannot invert");
}

Rational specialize(const LaurentPolynomial& p, const std::vector<Rational>& roots) {
  if (static_cast<int>(roots.size()) != p.session().num_vars()) {
    throw ConfigurationError("specialization needs one value per torus variable");
  }
  Rational acc(0);
  const int order = p.session().root_order();
  for (const auto& t : p.terms()) {
    Rational c;
    if (t.coeff.is_rational()) {
      c = t.coeff.constant_term();
    } else if (order == 2 || order == 1) {
      c = t.coeff.constant_term();
    } else {
      throw DomainError("cannot specialize an irrational cyclotomic coefficient to Q");
    }
    for (std::size_t i = 0; i < roots.size(); ++i) c *= rational_power(roots[i], t.mono.scaled(i));
    acc += c;
  }
  return acc;
}

Rational TorusScalar::specialize(const std::vector<Rational>& roots) const {
  Rational value = qkloc::specialize(num_, roots);
  for (const auto& [y, k] : den_) {
    const Rational b = Rational(1) - qkloc::specialize(LaurentPolynomial::term(context(), y, Cyclotomic(context()->field(), 1)), roots);
    if (b == 0) throw DomainError("denominator vanishes at the specialization point");
    value /= rational_power(b, k);
  }
  return value;
}

bool scalar_eq(const TorusScalar& a, const TorusScalar& b) {
  if (a.context() != b.context()) require_same_session(*a.context(), *b.context());
  TorusScalar diff(a);
  return TorusScalar::combine(diff, b, true, false);
}

}  // namespace qkloc
