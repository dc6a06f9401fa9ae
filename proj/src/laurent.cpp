#include "qkloc/laurent.hpp"

#include <algorithm>
#include <map>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

using Term = LaurentPolynomial::Term;

// Sorts by monomial, merges equal monomials and drops zeros.
std::vector<Term> canonicalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

LaurentPolynomial LaurentPolynomial::constant(ContextPtr ctx, const Rational& value) {
  LaurentPolynomial p(ctx);
  if (value != 0) p.terms_.push_back({Monomial::identity(*ctx), Cyclotomic(ctx->field(), value)});
  return p;
}

LaurentPolynomial LaurentPolynomial::term(ContextPtr ctx, Monomial mono, Cyclotomic coeff) {
  if (static_cast<int>(mono.size()) != ctx->num_vars()) {
    throw ConfigurationError("monomial variable count does not match the session");
  }
  LaurentPolynomial p(std::move(ctx));
  if (!coeff.is_zero()) p.terms_.push_back({std::move(mono), std::move(coeff)});
  return p;
}

LaurentPolynomial LaurentPolynomial::character(ContextPtr ctx, const Character& chi, const Rational& coeff) {
  const auto& field = ctx->field();
  return term(ctx, chi.mono, Cyclotomic::root_of_unity(field, chi.zeta) * coeff);
}

LaurentPolynomial LaurentPolynomial::binomial(ContextPtr ctx, const Character& chi) {
  return constant(ctx, 1) - character(ctx, chi);
}

LaurentPolynomial LaurentPolynomial::from_terms(ContextPtr ctx, std::vector<Term> terms) {
  LaurentPolynomial p(std::move(ctx));
  p.terms_ = canonicalize(std::move(terms));
  return p;
}

bool LaurentPolynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.is_identity() && terms_[0].coeff.is_one();
}

std::optional<Cyclotomic> LaurentPolynomial::as_constant() const {
  if (terms_.empty()) return Cyclotomic(ctx_->field());
  if (terms_.size() == 1 && terms_[0].mono.is_identity()) return terms_[0].coeff;
  return std::nullopt;
}

void LaurentPolynomial::check_session(const LaurentPolynomial& other) const {
  if (ctx_ != other.ctx_) require_same_session(*ctx_, *other.ctx_);
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void LaurentPolynomial::add_scaled(const LaurentPolynomial& other, bool negate) {
  check_session(other);
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->mono < b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->mono < a->mono) {
      out.push_back({b->mono, negate ? -b->coeff : b->coeff});
      ++b;
    } else {
      Cyclotomic c = std::move(a->coeff);
      if (negate) c -= b->coeff; else c += b->coeff;
      if (!c.is_zero()) out.push_back({std::move(a->mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
  add_scaled(other, false);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
  add_scaled(other, true);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_session(b);
  if (a.terms_.empty() || b.terms_.empty()) return LaurentPolynomial(a.ctx_);
  if (b.terms_.size() == 1 && b.terms_[0].mono.is_identity()) return a.times(b.terms_[0].coeff);
  if (a.terms_.size() == 1 && a.terms_[0].mono.is_identity()) return b.times(a.terms_[0].coeff);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  LaurentPolynomial r(a.ctx_);
  r.terms_ = canonicalize(std::move(prod));
  return r;
}

LaurentPolynomial LaurentPolynomial::times(const Character& chi) const {
  LaurentPolynomial r(*this);
  if (chi.zeta == 0) {
    for (auto& t : r.terms_) t.mono *= chi.mono;
  } else {
    const Cyclotomic z = Cyclotomic::root_of_unity(ctx_->field(), chi.zeta);
    for (auto& t : r.terms_) {
      t.mono *= chi.mono;
      t.coeff *= z;
    }
  }
  // Multiplying every monomial by the same one preserves the order.
  return r;
}

LaurentPolynomial LaurentPolynomial::times(const Cyclotomic& c) const {
  if (c.is_zero()) return LaurentPolynomial(ctx_);
  LaurentPolynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPolynomial LaurentPolynomial::times(const Rational& c) const {
  if (c == 0) return LaurentPolynomial(ctx_);
  LaurentPolynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
  LaurentPolynomial result = constant(ctx_, 1);
  LaurentPolynomial base = *this;
  while (k) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k) base = base * base;
  }
  return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::try_divide_binomial(const Monomial& y) const {
  if (y.is_identity()) throw DomainError("division by (1 - 1) = 0");
  if (static_cast<int>(y.size()) != ctx_->num_vars()) {
    throw ConfigurationError("binomial factor variable count does not match the session");
  }
  if (terms_.empty()) return *this;
  // (1 - y) | p iff the coefficients along every coset m + Z*y sum to zero;
  // the quotient coefficients are the running sums along the coset.
  std::size_t pivot = 0;
  while (y.scaled(pivot) == 0) ++pivot;
  const std::int64_t step = y.scaled(pivot);

  std::map<Monomial, std::map<std::int64_t, const Cyclotomic*>> cosets;
  for (const auto& t : terms_) {
    const std::int64_t k = floor_div(t.mono.scaled(pivot), step);
    cosets[t.mono * y.pow(-k)].emplace(k, &t.coeff);
  }
  std::vector<Term> quotient;
  for (const auto& [base, line] : cosets) {
    Cyclotomic running(ctx_->field());
    auto it = line.begin();
    const std::int64_t last = line.rbegin()->first;
    for (std::int64_t k = line.begin()->first; k <= last; ++k) {
      if (it != line.end() && it->first == k) {
        running += *it->second;
        ++it;
      }
      if (k == last) {
        if (!running.is_zero()) return std::nullopt;
      } else if (!running.is_zero()) {
        quotient.push_back({base * y.pow(k), running});
      }
    }
  }
  return from_terms(ctx_, std::move(quotient));
}

bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (!a.ctx_->same_session(*b.ctx_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

LaurentPolynomial laurent_arith(const LaurentPolynomial& a, const LaurentPolynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
  }
  return a;
}

std::optional<LaurentPolynomial> binomial_try_div(const LaurentPolynomial& p, const Monomial& factor) {
  return p.try_divide_binomial(factor);
}

}  // namespace qkloc
