#include "qkloc/qfunction.hpp"

#include <string>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

using Numerator = QFunction::Numerator;
using Series = std::vector<LaurentPolynomial>;

void add_to(Numerator& num, int p, const TorusScalar& c) {
  if (c.is_zero()) return;
  auto it = num.find(p);
  if (it == num.end()) {
    num.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) num.erase(it);
  }
}

Numerator multiply(const Numerator& a, const Numerator& b) {
  Numerator out;
  for (const auto& [p, c] : a)
    for (const auto& [s, d] : b) add_to(out, p + s, c * d);
  return out;
}

// num * (1 - q^a mu)^k
Numerator times_factor(Numerator num, const QFactor& f, int k) {
  for (int i = 0; i < k; ++i) {
    Numerator next = num;
    for (const auto& [p, c] : num) add_to(next, p + f.a, -c.times(Character::of(f.mu)));
    num = std::move(next);
  }
  return num;
}

// Exact quotient of num by (1 - q^a mu), if any.
std::optional<Numerator> try_divide(const Numerator& num, const QFactor& f) {
  if (num.empty()) return num;
  const int lo = num.begin()->first;
  const int hi = num.rbegin()->first;
  if (hi - lo < f.a) return std::nullopt;
  const Character mu = Character::of(f.mu);
  Numerator quot;
  for (int k = lo; k <= hi; ++k) {
    auto it = num.find(k);
    auto prev = quot.find(k - f.a);
    if (it == num.end() && prev == quot.end()) continue;
    TorusScalar v = it != num.end() ? it->second : TorusScalar(num.begin()->second.context());
    if (prev != quot.end()) v += prev->second.times(mu);
    if (k <= hi - f.a) {
      if (!v.is_zero()) quot.emplace(k, std::move(v));
    } else if (!v.is_zero()) {
      return std::nullopt;
    }
  }
  return quot;
}

Rational generalized_binomial(long p, long j) {
  Rational r(1);
  for (long i = 0; i < j; ++i) r *= make_rational(p - i, i + 1);
  r.canonicalize();
  return r;
}

// 1 / prod (1 - mu q^a)^k as a power series in q up to `order` inclusive.
// mu_sign = -1 uses mu^-1 (expansion at infinity).
Series inverse_series(const ContextPtr& ctx, const QFunction::Denominator& den, int order, bool inverted) {
  Series d(1, LaurentPolynomial::constant(ctx, 1));
  for (const auto& [f, k] : den) {
    const Monomial mu = inverted ? f.mu.inverse() : f.mu;
    for (int i = 0; i < k; ++i) {
      Series next(d.size() + static_cast<std::size_t>(f.a), LaurentPolynomial(ctx));
      for (std::size_t j = 0; j < d.size(); ++j) {
        next[j] += d[j];
        next[j + static_cast<std::size_t>(f.a)] -= d[j].times(Character::of(mu));
      }
      d = std::move(next);
    }
  }
  Series e;
  e.reserve(static_cast<std::size_t>(order) + 1);
  for (int j = 0; j <= order; ++j) {
    LaurentPolynomial v = j == 0 ? LaurentPolynomial::constant(ctx, 1) : LaurentPolynomial(ctx);
    for (int i = 1; i <= j && i < static_cast<int>(d.size()); ++i) v -= d[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - i)];
    e.push_back(std::move(v));
  }
  return e;
}

}  // namespace

QFunction::QFunction(ContextPtr ctx) : ctx_(std::move(ctx)) {}

QFunction::QFunction(const TorusScalar& constant) : ctx_(constant.context()) {
  if (!constant.is_zero()) num_.emplace(0, constant);
}

QFunction QFunction::monomial(const TorusScalar& c, int p) {
  QFunction f(c.context());
  if (!c.is_zero()) f.num_.emplace(p, c);
  return f;
}

QFunction QFunction::q_power(ContextPtr ctx, int p) {
  return monomial(TorusScalar::constant(std::move(ctx), 1), p);
}

QFunction QFunction::binomial(ContextPtr ctx, int a, const Character& chi) {
  QFunction f(ctx);
  add_to(f.num_, 0, TorusScalar::constant(ctx, 1));
  add_to(f.num_, a, -TorusScalar::character(ctx, chi));
  return f;
}

QFunction QFunction::factor_inverse(ContextPtr ctx, int a, const Character& chi, int mult) {
  if (a < 1) throw DomainError("q-factor power must be at least 1");
  if (mult < 0) throw DomainError("negative factor multiplicity");
  const int order = ctx->root_order();
  const int n = root_of_unity_order(chi.zeta, order);
  QFunction f = q_power(ctx, 0);
  if (n > 1) {
    // 1/(1 - x) = (1 + x + ... + x^{n-1}) / (1 - x^n), x = q^a chi
    QFunction geo(ctx);
    for (int t = 0; t < n; ++t) add_to(geo.num_, a * t, TorusScalar::character(ctx, chi.pow(t, order)));
    f = geo.pow(static_cast<unsigned>(mult));
  }
  f.add_factor(QFactor{a * n, chi.mono.pow(n)}, mult);
  f.cancel();
  return f;
}

QFunction QFunction::from_parts(ContextPtr ctx, Numerator num, Denominator den) {
  QFunction f(std::move(ctx));
  for (auto& [p, c] : num) add_to(f.num_, p, c);
  for (const auto& [factor, k] : den) {
    if (factor.a < 1) throw DomainError("q-factor power must be at least 1");
    if (k < 1) throw DomainError("q-factor multiplicity must be positive");
    f.add_factor(factor, k);
  }
  f.cancel();
  return f;
}

void QFunction::add_factor(const QFactor& factor, int mult) {
  if (static_cast<int>(factor.mu.size()) != ctx_->num_vars()) {
    throw ConfigurationError("q-factor monomial does not match the session");
  }
  if (mult > 0) den_[factor] += mult;
}

void QFunction::prune() {
  for (auto it = num_.begin(); it != num_.end();) it = it->second.is_zero() ? num_.erase(it) : std::next(it);
  if (num_.empty()) den_.clear();
}

void QFunction::cancel() {
  prune();
  for (auto it = den_.begin(); it != den_.end();) {
    while (it->second > 0) {
      auto q = try_divide(num_, it->first);
      if (!q) break;
      num_ = std::move(*q);
      --it->second;
    }
    it = it->second == 0 ? den_.erase(it) : std::next(it);
  }
}

std::optional<std::pair<int, int>> QFunction::numerator_range() const {
  if (num_.empty()) return std::nullopt;
  return std::make_pair(num_.begin()->first, num_.rbegin()->first);
}

TorusScalar QFunction::coefficient(int p) const {
  auto it = num_.find(p);
  return it == num_.end() ? TorusScalar(ctx_) : it->second;
}

QFunction QFunction::operator-() const {
  QFunction r(*this);
  for (auto& [p, c] : r.num_) c = -c;
  return r;
}

bool QFunction::combine(QFunction& a, const QFunction& b, bool subtract, bool normalize) {
  if (a.ctx_ != b.ctx_) require_same_session(*a.ctx_, *b.ctx_);
  if (b.num_.empty()) return a.num_.empty();
  if (a.num_.empty()) {
    a = subtract ? -b : b;
    return false;
  }
  if (a.den_ == b.den_) {
    for (const auto& [p, c] : b.num_) add_to(a.num_, p, subtract ? -c : c);
  } else {
    Denominator common = a.den_;
    for (const auto& [f, k] : b.den_) {
      auto& slot = common[f];
      slot = std::max(slot, k);
    }
    Numerator lhs = a.num_;
    Numerator rhs = b.num_;
    for (const auto& [f, k] : common) {
      auto ia = a.den_.find(f);
      const int ka = ia == a.den_.end() ? 0 : ia->second;
      if (k > ka) lhs = times_factor(std::move(lhs), f, k - ka);
      auto ib = b.den_.find(f);
      const int kb = ib == b.den_.end() ? 0 : ib->second;
      if (k > kb) rhs = times_factor(std::move(rhs), f, k - kb);
    }
    for (const auto& [p, c] : rhs) add_to(lhs, p, subtract ? -c : c);
    a.num_ = std::move(lhs);
    a.den_ = std::move(common);
  }
  if (normalize) a.cancel();
  return a.num_.empty();
}

QFunction& QFunction::operator+=(const QFunction& other) {
  combine(*this, other, false, true);
  return *this;
}

QFunction& QFunction::operator-=(const QFunction& other) {
  combine(*this, other, true, true);
  return *this;
}

QFunction& QFunction::operator*=(const QFunction& other) {
  if (ctx_ != other.ctx_) require_same_session(*ctx_, *other.ctx_);
  if (num_.empty()) return *this;
  if (other.num_.empty()) {
    num_.clear();
    den_.clear();
    return *this;
  }
  num_ = multiply(num_, other.num_);
  for (const auto& [f, k] : other.den_) den_[f] += k;
  cancel();
  return *this;
}

QFunction QFunction::times(const TorusScalar& c) const {
  QFunction r(*this);
  for (auto& [p, v] : r.num_) v *= c;
  r.prune();
  return r;
}

QFunction QFunction::times_q(int p) const {
  QFunction r(ctx_);
  for (const auto& [s, c] : num_) r.num_.emplace(s + p, c);
  r.den_ = den_;
  return r;
}

QFunction QFunction::pow(unsigned k) const {
  QFunction r = q_power(ctx_, 0);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

QFunction QFunction::divided_by_factor(int a, const Character& chi, int mult) const {
  return *this * factor_inverse(ctx_, a, chi, mult);
}

QFunction QFunction::without_factor(const QFactor& factor) const {
  QFunction r(*this);
  auto it = r.den_.find(factor);
  if (it != r.den_.end()) {
    if (--it->second == 0) r.den_.erase(it);
  } else {
    r.num_ = times_factor(std::move(r.num_), factor, 1);
    r.cancel();
  }
  return r;
}

QFunction QFunction::inverse() const {
  if (num_.empty()) throw DomainError("inverse of the zero q-function");
  QFunction expanded = q_power(ctx_, 0);
  for (const auto& [f, k] : den_) expanded.num_ = times_factor(std::move(expanded.num_), f, k);
  const auto& [p1, c1] = *num_.begin();
  const TorusScalar c1_inv = c1.inverse();
  if (num_.size() == 1) return expanded.times(c1_inv).times_q(-p1);
  if (num_.size() == 2) {
    const auto& [p2, c2] = *num_.rbegin();
    const TorusScalar ratio = -(c2 * c1_inv);
    const auto& terms = ratio.numerator().terms();
    if (ratio.is_laurent() && terms.size() == 1) {
      const auto& field = ctx_->field();
      for (int e = 0; e < ctx_->root_order(); ++e) {
        if (Cyclotomic::root_of_unity(field, e) == terms[0].coeff) {
          return expanded.times(c1_inv).times_q(-p1).divided_by_factor(p2 - p1, Character::make(*ctx_, e, terms[0].mono));
        }
      }
    }
  }
  throw DomainError("q-function numerator is not a unit times (1 - q^a chi); cannot invert");
}

bool qf_eq(const QFunction& f, const QFunction& g) {
  QFunction diff(f);
  return QFunction::combine(diff, g, true, false);
}

QFunction qf_arith(const QFunction& f, const QFunction& g, ArithOp op) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
  }
  return f;
}

PoleLocus principal_locus(const AlgebraContext& ctx, int a, const Monomial& mu) {
  return split_factor(ctx, a, mu).front();
}

std::vector<PoleLocus> split_factor(const AlgebraContext& ctx, int a, const Monomial& mu) {
  require_root(ctx, a);
  auto root = mu.root(a);
  if (!root) {
    throw RootOrderExceeded("the " + std::to_string(a) + "-th root of a q-factor monomial leaves the exponent lattice 1/" +
                            std::to_string(ctx.root_order()));
  }
  std::vector<PoleLocus> loci;
  const int step = ctx.root_order() / a;
  for (int t = 0; t < a; ++t) loci.push_back(PoleLocus{static_cast<std::int64_t>(t) * step, *root});
  return loci;
}

TorusScalar qf_eval(const QFunction& f, const Character& q0) {
  const auto& ctx = f.context();
  const int order = ctx->root_order();
  TorusScalar value(ctx);
  for (const auto& [p, c] : f.numerator()) value += c.times(q0.pow(p, order));
  for (const auto& [factor, k] : f.denominator()) {
    const Character chi = q0.pow(factor.a, order).times(Character::of(factor.mu), order);
    if (chi.is_identity()) throw PoleHit("a denominator factor vanishes at the evaluation point");
    value = value.divided_by_binomial(chi, k);
  }
  return value;
}

TorusScalar qf_residue(const QFunction& f, const PoleLocus& at) {
  const auto& ctx = f.context();
  const int order = ctx->root_order();
  const Character q0 = at.pole_point(order);
  int total = 0;
  const QFactor* hit = nullptr;
  for (const auto& [factor, k] : f.denominator()) {
    if (q0.pow(factor.a, order).times(Character::of(factor.mu), order).is_identity()) {
      total += k;
      hit = &factor;
    }
  }
  if (total == 0) throw NotAPole("no denominator factor vanishes at the requested locus");
  if (total > 1) throw UnsupportedOrder("pole of order " + std::to_string(total) + " at the requested locus");
  const int a = hit->a;
  const TorusScalar g = qf_eval(f.without_factor(*hit), q0);
  return -g.times(make_rational(1, a));
}

QFunction elementary_fraction(ContextPtr ctx, const PoleLocus& locus, int order) {
  return QFunction::factor_inverse(std::move(ctx), 1, locus.base(), order);
}

QFunction PartialFractionForm::recombine() const {
  QFunction acc = laurent_part;
  for (const auto& t : fraction_terms) acc += elementary_fraction(acc.context(), t.locus, t.order).times(t.coeff);
  return acc;
}

QFunction qf_laurent_part(const QFunction& f) {
  const auto& ctx = f.context();
  if (f.is_laurent()) return f;
  QFunction::Numerator out;
  const auto range = f.numerator_range();
  if (!range) return QFunction(ctx);
  const auto [lo, hi] = *range;
  const auto& num = f.numerator();
  if (lo < 0) {
    // Principal part at q = 0; the denominator is 1 + O(q) there.
    const Series e = inverse_series(ctx, f.denominator(), -1 - lo, false);
    for (int p = lo; p < 0; ++p) {
      TorusScalar v(ctx);
      for (auto it = num.begin(); it != num.end() && it->first <= p; ++it) {
        v += it->second * TorusScalar(e[static_cast<std::size_t>(p - it->first)]);
      }
      add_to(out, p, v);
    }
  }
  // At infinity: (1 - q^a mu) = -mu q^a (1 - mu^-1 q^-a).
  int shift = 0;
  int sign_count = 0;
  Monomial unit = Monomial::identity(*ctx);
  for (const auto& [factor, k] : f.denominator()) {
    shift += factor.a * k;
    sign_count += k;
    unit *= factor.mu.pow(-k);
  }
  if (hi - shift >= 0) {
    const Series e = inverse_series(ctx, f.denominator(), hi - shift, true);
    const Rational sign = sign_count % 2 == 0 ? 1 : -1;
    for (int d = 0; d <= hi - shift; ++d) {
      TorusScalar v(ctx);
      for (const auto& [p, c] : num) {
        const int s = p - shift - d;
        if (s >= 0) v += c * TorusScalar(e[static_cast<std::size_t>(s)]);
      }
      add_to(out, d, v.times(Character::of(unit)).times(sign));
    }
  }
  return QFunction::from_parts(ctx, std::move(out), {});
}

PartialFractionForm qf_partial_fractions(const QFunction& f) {
  const auto& ctx = f.context();
  const int order = ctx->root_order();
  std::map<PoleLocus, int> loci;
  for (const auto& [factor, k] : f.denominator()) {
    for (const auto& locus : split_factor(*ctx, factor.a, factor.mu)) loci[locus] += k;
  }
  PartialFractionForm form{qf_laurent_part(f), {}};
  if (f.is_zero()) return form;

  for (const auto& [locus, n] : loci) {
    const Character q0 = locus.pole_point(order);
    // g(t) = f * (1 - q nu)^n at q = q0 (1 - t), developed to t^{n-1}.
    std::vector<TorusScalar> series;
    for (int j = 0; j < n; ++j) {
      TorusScalar v(ctx);
      for (const auto& [p, c] : f.numerator()) {
        const Rational b = generalized_binomial(p, j) * (j % 2 == 0 ? 1 : -1);
        if (b != 0) v += c.times(q0.pow(p, order)).times(b);
      }
      series.push_back(std::move(v));
    }
    for (const auto& [other, m] : loci) {
      if (other == locus) continue;
      const Character u = q0.times(other.base(), order);
      if (n == 1) {
        series[0] = series[0].divided_by_binomial(u, m);
        continue;
      }
      // 1/((1-u) + u t) = sum_j (-u)^j t^j / (1-u)^{j+1}
      std::vector<TorusScalar> inv;
      for (int j = 0; j < n; ++j) {
        inv.push_back(TorusScalar::binomial_inverse(ctx, u, j + 1).times(u.pow(j, order)).times(Rational(j % 2 == 0 ? 1 : -1)));
      }
      for (int rep = 0; rep < m; ++rep) {
        std::vector<TorusScalar> next(static_cast<std::size_t>(n), TorusScalar(ctx));
        for (int i = 0; i < n; ++i)
          for (int j = 0; i + j < n; ++j) next[static_cast<std::size_t>(i + j)] += series[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j)];
        series = std::move(next);
      }
    }
    for (int k = n; k >= 1; --k) {
      const TorusScalar& c = series[static_cast<std::size_t>(n - k)];
      if (!c.is_zero()) form.fraction_terms.push_back(FractionTerm{locus, k, c});
    }
  }
  return form;
}

KpmSplit qf_split_kpm(const QFunction& f) {
  QFunction kplus = qf_laurent_part(f);
  QFunction kminus = f - kplus;
  return KpmSplit{std::move(kplus), std::move(kminus)};
}

}  // namespace qkloc
