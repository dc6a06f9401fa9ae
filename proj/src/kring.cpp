#include "qkloc/kring.hpp"

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

void check_index(const AlgebraContext& ctx, int i) {
  if (i < 0 || i > ctx.dimension()) {
    throw DomainError("fixed point index " + std::to_string(i) + " out of range 0.." + std::to_string(ctx.dimension()));
  }
}

TorusScalar lambda_power(const ContextPtr& ctx, int i, int k) {
  return TorusScalar::character(ctx, Character::of(Monomial::variable(*ctx, i, k)));
}

}  // namespace

KClass::KClass(ContextPtr ctx)
    : ctx_(ctx), components_(static_cast<std::size_t>(ctx->num_vars()), TorusScalar(ctx)) {}

KClass::KClass(ContextPtr ctx, std::vector<TorusScalar> components)
    : ctx_(std::move(ctx)), components_(std::move(components)) {
  if (static_cast<int>(components_.size()) != ctx_->num_vars()) {
    throw ConfigurationError("a K-class needs " + std::to_string(ctx_->num_vars()) + " components");
  }
}

KClass KClass::delta(ContextPtr ctx, int i) {
  check_index(*ctx, i);
  KClass k(ctx);
  k.components_[static_cast<std::size_t>(i)] = TorusScalar::constant(ctx, 1);
  return k;
}

KClass KClass::constant(ContextPtr ctx, const TorusScalar& value) {
  return KClass(ctx, std::vector<TorusScalar>(static_cast<std::size_t>(ctx->num_vars()), value));
}

KClass& KClass::operator+=(const KClass& other) {
  require_same_session(*ctx_, *other.ctx_);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += other.components_[i];
  return *this;
}

KClass& KClass::operator*=(const KClass& other) {
  require_same_session(*ctx_, *other.ctx_);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] *= other.components_[i];
  return *this;
}

bool KClass::is_zero() const {
  for (const auto& c : components_)
    if (!scalar_eq(c, TorusScalar(ctx_))) return false;
  return true;
}

bool kclass_eq(const KClass& a, const KClass& b) {
  require_same_session(*a.ctx_, *b.ctx_);
  for (std::size_t i = 0; i < a.components_.size(); ++i)
    if (!scalar_eq(a.components_[i], b.components_[i])) return false;
  return true;
}

std::vector<TorusScalar> ring_relation(const ContextPtr& ctx) {
  std::vector<TorusScalar> r{TorusScalar::constant(ctx, 1)};
  for (int i = 0; i < ctx->num_vars(); ++i) {
    const TorusScalar c = -lambda_power(ctx, i, -1);
    std::vector<TorusScalar> next(r.size() + 1, TorusScalar(ctx));
    for (std::size_t k = 0; k < r.size(); ++k) {
      next[k] += r[k];
      next[k + 1] += r[k] * c;
    }
    r = std::move(next);
  }
  return r;
}

std::vector<TorusScalar> reduce_mod_relation(const ContextPtr& ctx, std::vector<TorusScalar> coeffs) {
  const std::size_t n = static_cast<std::size_t>(ctx->num_vars());
  if (coeffs.size() > n) {
    const auto rel = ring_relation(ctx);
    // The leading coefficient prod(-1/Lambda_i) is a unit.
    const TorusScalar lead_inv = rel.back().inverse();
    for (std::size_t k = coeffs.size(); k-- > n;) {
      if (coeffs[k].is_zero()) continue;
      const TorusScalar c = coeffs[k] * lead_inv;
      for (std::size_t t = 0; t <= n; ++t) coeffs[k - n + t] -= c * rel[t];
    }
  }
  coeffs.resize(n, TorusScalar(ctx));
  return coeffs;
}

PPolynomial::PPolynomial(ContextPtr ctx)
    : ctx_(ctx), coeffs_(static_cast<std::size_t>(ctx->num_vars()), TorusScalar(ctx)) {}

PPolynomial::PPolynomial(ContextPtr ctx, std::vector<TorusScalar> coeffs)
    : ctx_(ctx), coeffs_(reduce_mod_relation(ctx, std::move(coeffs))) {}

PPolynomial PPolynomial::constant(const TorusScalar& c) {
  return PPolynomial(c.context(), std::vector<TorusScalar>{c});
}

PPolynomial PPolynomial::hopf(ContextPtr ctx) {
  return PPolynomial(ctx, {TorusScalar(ctx), TorusScalar::constant(ctx, 1)});
}

PPolynomial PPolynomial::operator-() const {
  PPolynomial r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

PPolynomial& PPolynomial::operator+=(const PPolynomial& other) {
  require_same_session(*ctx_, *other.ctx_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

PPolynomial& PPolynomial::operator-=(const PPolynomial& other) {
  require_same_session(*ctx_, *other.ctx_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

PPolynomial& PPolynomial::operator*=(const PPolynomial& other) {
  require_same_session(*ctx_, *other.ctx_);
  std::vector<TorusScalar> prod(2 * coeffs_.size() - 1, TorusScalar(ctx_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      if (!other.coeffs_[j].is_zero()) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = reduce_mod_relation(ctx_, std::move(prod));
  return *this;
}

PPolynomial PPolynomial::times(const TorusScalar& c) const {
  PPolynomial r(*this);
  for (auto& v : r.coeffs_) v *= c;
  return r;
}

TorusScalar PPolynomial::at_fixed_point(int i) const {
  check_index(*ctx_, i);
  TorusScalar acc(ctx_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) acc += coeffs_[k] * lambda_power(ctx_, i, static_cast<int>(k));
  }
  return acc;
}

bool PPolynomial::is_zero() const {
  for (const auto& c : coeffs_)
    if (!scalar_eq(c, TorusScalar(ctx_))) return false;
  return true;
}

bool ppoly_eq(const PPolynomial& a, const PPolynomial& b) {
  require_same_session(*a.ctx_, *b.ctx_);
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
    if (!scalar_eq(a.coeffs_[k], b.coeffs_[k])) return false;
  return true;
}

TorusScalar phi_value(const ContextPtr& ctx, int i) {
  check_index(*ctx, i);
  TorusScalar acc = TorusScalar::constant(ctx, 1);
  for (int j = 0; j < ctx->num_vars(); ++j) {
    if (j != i) acc *= TorusScalar(LaurentPolynomial::binomial(ctx, Character::of(Monomial::ratio(*ctx, i, j))));
  }
  return acc;
}

KClass p_to_phi(const PPolynomial& p) {
  const auto& ctx = p.context();
  std::vector<TorusScalar> comps;
  for (int i = 0; i < ctx->num_vars(); ++i) comps.push_back(p.at_fixed_point(i));
  return KClass(ctx, std::move(comps));
}

PPolynomial phi_to_p(const KClass& k) {
  const auto& ctx = k.context();
  const int n = ctx->num_vars();
  std::vector<TorusScalar> acc(static_cast<std::size_t>(n), TorusScalar(ctx));
  for (int i = 0; i < n; ++i) {
    if (k[static_cast<std::size_t>(i)].is_zero()) continue;
    // prod_{j != i} (P - Lambda_j) / (Lambda_i - Lambda_j)
    std::vector<TorusScalar> basis{k[static_cast<std::size_t>(i)]};
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const TorusScalar diff = lambda_power(ctx, i, 1) - lambda_power(ctx, j, 1);
      const TorusScalar inv = diff.inverse();
      std::vector<TorusScalar> next(basis.size() + 1, TorusScalar(ctx));
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t] * inv;
        next[t] -= basis[t] * inv * lambda_power(ctx, j, 1);
      }
      basis = std::move(next);
    }
    for (std::size_t t = 0; t < basis.size(); ++t) acc[t] += basis[t];
  }
  return PPolynomial(ctx, std::move(acc));
}

}  // namespace qkloc
