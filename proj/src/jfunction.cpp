#include "qkloc/jfunction.hpp"

#include <numeric>

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

using QPoly = QFunction;  // Laurent in q, no denominator

// Polynomial in P with q-polynomial coefficients, stored per q-power.
using QPPoly = std::map<int, PPolynomial>;

QPPoly qpp_mul(const ContextPtr& ctx, const QPPoly& a, const QPPoly& b) {
  QPPoly out;
  for (const auto& [p, x] : a)
    for (const auto& [s, y] : b) {
      auto it = out.try_emplace(p + s, ctx).first;
      it->second += x * y;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

// Coefficient of P^k as a q-polynomial.
QPoly p_coefficient(const ContextPtr& ctx, const QPPoly& f, int k) {
  QPoly out(ctx);
  for (const auto& [p, poly] : f) {
    const auto& c = poly.coeffs()[static_cast<std::size_t>(k)];
    if (!c.is_zero()) out += QFunction::monomial(c, p);
  }
  return out;
}

using Matrix = std::vector<std::vector<QPoly>>;

QPoly determinant(const ContextPtr& ctx, const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return QPoly(TorusScalar::constant(ctx, 1));
  if (n == 1) return m[0][0];
  QPoly acc(ctx);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    Matrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<QPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    const QPoly term = m[0][c] * determinant(ctx, minor);
    if (c % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

// Cofactor C_{row, col}.
QPoly cofactor(const ContextPtr& ctx, const Matrix& m, std::size_t row, std::size_t col) {
  Matrix minor;
  for (std::size_t r = 0; r < m.size(); ++r) {
    if (r == row) continue;
    std::vector<QPoly> line;
    for (std::size_t k = 0; k < m.size(); ++k)
      if (k != col) line.push_back(m[r][k]);
    minor.push_back(std::move(line));
  }
  const QPoly d = determinant(ctx, minor);
  return (row + col) % 2 == 0 ? d : -d;
}

}  // namespace

bool jbundle_eq(const JBundle& a, const JBundle& b) {
  if (a.truncation != b.truncation || a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    for (int d = 0; d <= a.truncation; ++d)
      if (!qf_eq(a.components[i].at(d), b.components[i].at(d))) return false;
  return true;
}

QFunction j_coeff(const ContextPtr& ctx, int i, int d) {
  if (i < 0 || i > ctx->dimension()) throw DomainError("fixed point index out of range");
  if (d < 0) throw DomainError("Q-degree must be non-negative");
  const Monomial one = Monomial::identity(*ctx);
  if (d == 0) return QFunction::binomial(ctx, 1, Character::of(one));
  QFunction::Denominator den;
  for (int r = 2; r <= d; ++r) den[QFactor{r, one}] += 1;
  for (int j = 0; j < ctx->num_vars(); ++j) {
    if (j == i) continue;
    const Monomial ratio = Monomial::ratio(*ctx, i, j);
    for (int r = 1; r <= d; ++r) den[QFactor{r, ratio}] += 1;
  }
  QFunction::Numerator num;
  num.emplace(0, TorusScalar::constant(ctx, 1));
  return QFunction::from_parts(ctx, std::move(num), std::move(den));
}

JBundle j_series(const ContextPtr& ctx, int max_degree, Exec exec) {
  if (max_degree < 0) throw DomainError("truncation must be non-negative");
  const int need = default_root_order(max_degree);
  if (ctx->root_order() % need != 0) {
    throw RootOrderExceeded("root order " + std::to_string(ctx->root_order()) + " is not divisible by lcm(1.." +
                            std::to_string(max_degree) + ") = " + std::to_string(need));
  }
  const int n = ctx->num_vars();
  const int per = max_degree + 1;
  std::vector<QFunction> flat(static_cast<std::size_t>(n * per), QFunction(ctx));
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < n * per; ++t) flat[static_cast<std::size_t>(t)] = j_coeff(ctx, t / per, t % per);
  } else {
    for (int t = 0; t < n * per; ++t) flat[static_cast<std::size_t>(t)] = j_coeff(ctx, t / per, t % per);
  }
  JBundle out{ctx, max_degree, {}};
  for (int i = 0; i < n; ++i) {
    NovikovSeries s{max_degree, {}};
    for (int d = 0; d <= max_degree; ++d) s.coeffs.push_back(std::move(flat[static_cast<std::size_t>(i * per + d)]));
    out.components.push_back(std::move(s));
  }
  return out;
}

QFunction PQFunction::restrict_to(int i) const {
  QFunction::Numerator values;
  for (const auto& [p, poly] : num) {
    TorusScalar v = poly.at_fixed_point(i);
    if (!v.is_zero()) values.emplace(p, std::move(v));
  }
  return QFunction::from_parts(ctx, std::move(values), den);
}

PQFunction j_in_p_basis(const ContextPtr& ctx, int d) {
  if (d < 0) throw DomainError("Q-degree must be non-negative");
  const int n = ctx->num_vars();
  PQFunction out{ctx, {}, {}};
  if (d == 0) {
    out.num.emplace(0, PPolynomial::constant(TorusScalar::constant(ctx, 1)));
    out.num.emplace(1, PPolynomial::constant(TorusScalar::constant(ctx, -1)));
    return out;
  }

  // D(P) = prod_i prod_r (1 - q^r P / Lambda_i)
  QPPoly dp;
  dp.emplace(0, PPolynomial::constant(TorusScalar::constant(ctx, 1)));
  const PPolynomial hopf = PPolynomial::hopf(ctx);
  for (int i = 0; i < n; ++i) {
    const TorusScalar inv = TorusScalar::character(ctx, Character::of(Monomial::variable(*ctx, i, -1)));
    for (int r = 1; r <= d; ++r) {
      QPPoly factor;
      factor.emplace(0, PPolynomial::constant(TorusScalar::constant(ctx, 1)));
      factor.emplace(r, hopf.times(-inv));
      dp = qpp_mul(ctx, dp, factor);
    }
  }

  // Column k of the multiplication matrix is P^k D(P).
  Matrix m(static_cast<std::size_t>(n), std::vector<QPoly>(static_cast<std::size_t>(n), QPoly(ctx)));
  QPPoly col = dp;
  for (int k = 0; k < n; ++k) {
    for (int row = 0; row < n; ++row) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(k)] = p_coefficient(ctx, col, row);
    QPPoly shift;
    shift.emplace(0, hopf);
    col = qpp_mul(ctx, col, shift);
  }

  // det(m) = prod_j D(Lambda_j), kept factored.
  QFunction::Denominator det_factors;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i)
      for (int r = 1; r <= d; ++r) det_factors[QFactor{r, Monomial::ratio(*ctx, j, i)}] += 1;
  QFunction expanded(TorusScalar::constant(ctx, 1));
  for (const auto& [factor, k] : det_factors)
    expanded *= QFunction::binomial(ctx, factor.a, Character::of(factor.mu)).pow(static_cast<unsigned>(k));
  if (!qf_eq(determinant(ctx, m), expanded)) throw OracleError("multiplication matrix determinant mismatch");

  // D(P)^{-1} = (sum_k adj[k][0] P^k) / det
  std::vector<QPoly> adj_col;
  for (int k = 0; k < n; ++k) adj_col.push_back(cofactor(ctx, m, 0, static_cast<std::size_t>(k)));
  // J_d = (1 - q) D(P)^{-1}
  std::map<int, std::vector<TorusScalar>> by_power;
  for (int k = 0; k < n; ++k) {
    for (const auto& [p, c] : adj_col[static_cast<std::size_t>(k)].numerator()) {
      for (int shift = 0; shift <= 1; ++shift) {
        auto it = by_power.try_emplace(p + shift, static_cast<std::size_t>(n), TorusScalar(ctx)).first;
        if (shift == 0)
          it->second[static_cast<std::size_t>(k)] += c;
        else
          it->second[static_cast<std::size_t>(k)] -= c;
      }
    }
  }
  for (auto& [p, coeffs] : by_power) {
    PPolynomial poly(ctx, std::move(coeffs));
    if (!poly.is_zero()) out.num.emplace(p, std::move(poly));
  }
  out.den = std::move(det_factors);
  return out;
}

}  // namespace qkloc
