#include "qkloc/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

using IntPoly = std::vector<long long>;

// Exact division of integer polynomials with monic divisor.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long long c = num[k];
    quot[k - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  for (std::size_t k = 0; k < dn; ++k) {
    if (num[k] != 0) throw DomainError("cyclotomic division left a remainder");
  }
  return quot;
}

void trim(std::vector<Rational>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a modulo b over Q.
std::vector<Rational> poly_mod(std::vector<Rational> a, const std::vector<Rational>& b,
                               std::vector<Rational>* quotient = nullptr) {
  trim(a);
  if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size()) {
    const Rational c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    if (quotient) (*quotient)[shift] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[shift + t] -= c * b[t];
    trim(a);
  }
  return a;
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

std::vector<Rational> poly_sub(std::vector<Rational> a, const std::vector<Rational>& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long long> cyclotomic_polynomial(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  // x^M - 1 divided by Phi_d for every proper divisor d.
  IntPoly p(static_cast<std::size_t>(order) + 1, 0);
  p.front() = -1;
  p.back() = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

CyclotomicField::CyclotomicField(int order)
    : order_(order), degree_(euler_phi(order)), modulus_(cyclotomic_polynomial(order)) {
  const int count = std::max(order_, 2 * degree_ - 1);
  powers_.reserve(static_cast<std::size_t>(count));
  IntPoly cur(static_cast<std::size_t>(degree_), 0);
  cur[0] = 1;
  for (int k = 0; k < count; ++k) {
    powers_.push_back(cur);
    // Multiply by x and fold the overflow coefficient with the monic modulus.
    const long long top = cur.back();
    for (int t = degree_ - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    for (int t = 0; t < degree_; ++t) cur[t] -= top * modulus_[t];
  }
}

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1) throw DomainError("cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[order];
  if (!slot) slot.reset(new CyclotomicField(order));
  return *slot;
}

const std::vector<long long>& CyclotomicField::root_power(long long k) const {
  long long r = k % order_;
  if (r < 0) r += order_;
  return powers_[static_cast<std::size_t>(r)];
}

Cyclotomic::Cyclotomic(const CyclotomicField& field)
    : field_(&field), coeffs_(static_cast<std::size_t>(field.degree()), Rational(0)) {}

Cyclotomic::Cyclotomic(const CyclotomicField& field, const Rational& value) : Cyclotomic(field) {
  coeffs_[0] = value;
}

Cyclotomic::Cyclotomic(const CyclotomicField& field, std::vector<Rational> coeffs)
    : field_(&field), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::root_of_unity(const CyclotomicField& field, long long k) {
  Cyclotomic z(field);
  const auto& p = field.root_power(k);
  for (std::size_t t = 0; t < p.size(); ++t) z.coeffs_[t] = static_cast<long>(p[t]);
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t t = 1; t < coeffs_.size(); ++t)
    if (coeffs_[t] != 0) return false;
  return true;
}

bool Cyclotomic::is_one() const { return is_rational() && coeffs_[0] == 1; }

void Cyclotomic::check_field(const Cyclotomic& other) const {
  if (field_ != other.field_) {
    throw ConfigurationError("cyclotomic values of orders " + std::to_string(order()) + " and " +
                             std::to_string(other.order()) + " combined");
  }
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) {
  check_field(other);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (other.coeffs_[t] != 0) coeffs_[t] += other.coeffs_[t];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) {
  check_field(other);
  for (std::size_t t = 0; t < coeffs_.size(); ++t)
    if (other.coeffs_[t] != 0) coeffs_[t] -= other.coeffs_[t];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  for (auto& c : coeffs_)
    if (c != 0) c *= r;
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) {
  check_field(other);
  if (other.is_rational()) return *this *= other.coeffs_[0];
  if (is_rational()) {
    const Rational c = coeffs_[0];
    coeffs_ = other.coeffs_;
    return *this *= c;
  }
  const std::size_t n = coeffs_.size();
  std::vector<Rational> wide(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.coeffs_[j] != 0) wide[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  std::vector<Rational> out(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(n));
  for (std::size_t k = n; k < wide.size(); ++k) {
    if (wide[k] == 0) continue;
    const auto& p = field_->reduced_power(static_cast<int>(k));
    for (std::size_t t = 0; t < n; ++t)
      if (p[t] != 0) out[t] += wide[k] * static_cast<long>(p[t]);
  }
  coeffs_ = std::move(out);
  return *this;
}

Cyclotomic Cyclotomic::times_root(long long k) const {
  return *this * root_of_unity(*field_, k);
}

namespace {
std::vector<Rational> as_rationals(const std::vector<long long>& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (long long c : v) out.emplace_back(static_cast<long>(c));
  return out;
}
}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in Q(zeta)");
  if (is_rational()) return Cyclotomic(*field_, Rational(1) / coeffs_[0]);
  // Extended Euclid: track s with s*a == r (mod Phi).
  const std::vector<Rational> modulus = as_rationals(field_->modulus());
  std::vector<Rational> r0 = modulus;
  std::vector<Rational> r1 = coeffs_;
  trim(r1);
  std::vector<Rational> s0, s1{Rational(1)};
  while (r1.size() > 1) {
    std::vector<Rational> q;
    auto rem = poly_mod(r0, r1, &q);
    auto s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is now a nonzero constant.
  const Rational c = r1.at(0);
  auto s = poly_mod(s1, modulus);
  s.resize(coeffs_.size(), Rational(0));
  for (auto& v : s) v /= c;
  return Cyclotomic(*field_, std::move(s));
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

Cyclotomic cyc_reduce(std::span<const std::pair<long long, Rational>> raw, int order) {
  const auto& field = CyclotomicField::get(order);
  Cyclotomic acc(field);
  for (const auto& [power, coeff] : raw) {
    if (coeff == 0) continue;
    acc += Cyclotomic::root_of_unity(field, power) * coeff;
  }
  return acc;
}

}  // namespace qkloc
