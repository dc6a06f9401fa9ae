#include "qkloc/localization.hpp"

#include "qkloc/errors.hpp"

namespace qkloc {

namespace {

TorusScalar one(const ContextPtr& ctx) { return TorusScalar::constant(ctx, 1); }

TorusScalar lambda_char(const ContextPtr& ctx, const Monomial& m) {
  return TorusScalar::character(ctx, Character::of(m));
}

// Coefficient of t^n in prod_v 1/(1 - x_v t).
LaurentPolynomial geometric_coefficient(const ContextPtr& ctx, const std::vector<Monomial>& xs, int n) {
  std::vector<LaurentPolynomial> series(static_cast<std::size_t>(n) + 1, LaurentPolynomial(ctx));
  series[0] = LaurentPolynomial::constant(ctx, 1);
  for (const auto& x : xs) {
    // Multiply by sum_t x^t t^t: s'_k = s_k + x s'_{k-1}.
    for (std::size_t k = 1; k < series.size(); ++k) series[k] += series[k - 1].times(Character::of(x));
  }
  return series.back();
}

}  // namespace

void validate_leg(const AlgebraContext& ctx, const LegSpec& leg) {
  const int n = ctx.dimension();
  if (leg.i < 0 || leg.i > n || leg.j < 0 || leg.j > n) throw DomainError("leg endpoint out of range");
  if (leg.i == leg.j) throw DomainError("leg endpoints must differ");
  if (leg.m < 1) throw DomainError("leg multiplicity must be positive");
}

std::vector<Character> tangent_characters(const ContextPtr& ctx, const LegSpec& leg, int branch) {
  validate_leg(*ctx, leg);
  require_root(*ctx, leg.m);
  const int order = ctx->root_order();
  const int m = leg.m;
  std::vector<Character> out;
  for (int a = 0; a < ctx->num_vars(); ++a) {
    for (int r = 0; r <= m; ++r) {
      const int s = m - r;
      if ((a == leg.i && r == m) || (a == leg.j && s == m)) continue;
      std::vector<Rational> e(static_cast<std::size_t>(ctx->num_vars()), Rational(0));
      e[static_cast<std::size_t>(a)] += 1;
      e[static_cast<std::size_t>(leg.i)] -= make_rational(r, m);
      e[static_cast<std::size_t>(leg.j)] -= make_rational(s, m);
      const std::int64_t zeta = static_cast<std::int64_t>(branch) * s * (order / m);
      out.push_back(Character::make(*ctx, zeta, Monomial::from_exponents(*ctx, e)));
    }
  }
  return out;
}

std::vector<Monomial> tangent_eigenvalues(const ContextPtr& ctx, const LegSpec& leg) {
  std::vector<Monomial> out;
  for (const auto& chi : tangent_characters(ctx, leg, 0)) out.push_back(chi.mono);
  return out;
}

TorusScalar c_coeff(const ContextPtr& ctx, const LegSpec& leg, CMethod method) {
  validate_leg(*ctx, leg);
  require_root(*ctx, leg.m);
  const int order = ctx->root_order();
  LaurentPolynomial acc = LaurentPolynomial::constant(ctx, 1);
  if (method == CMethod::tangent) {
    for (const auto& chi : tangent_characters(ctx, leg, 0))
      acc = acc * LaurentPolynomial::binomial(ctx, chi.inverse(order));
    return TorusScalar(acc);
  }
  const int m = leg.m;
  for (int a = 0; a < ctx->num_vars(); ++a) {
    if (a != leg.i) acc = acc * LaurentPolynomial::binomial(ctx, Character::of(Monomial::ratio(*ctx, leg.i, a)));
    if (a != leg.j) acc = acc * LaurentPolynomial::binomial(ctx, Character::of(Monomial::ratio(*ctx, leg.j, a)));
  }
  for (int r = 1; r < m; ++r) {
    for (int a = 0; a < ctx->num_vars(); ++a) {
      const Monomial y = Monomial::ratio(*ctx, leg.j, a).pow(r) * Monomial::ratio(*ctx, leg.i, a).pow(m - r);
      acc = acc * LaurentPolynomial::binomial(ctx, Character::of(*y.root(m)));
    }
  }
  return TorusScalar(acc);
}

TorusScalar c_coeff_inverse(const ContextPtr& ctx, const LegSpec& leg, int branch) {
  const int order = ctx->root_order();
  TorusScalar acc = one(ctx);
  for (const auto& chi : tangent_characters(ctx, leg, branch))
    acc = acc * TorusScalar::binomial_inverse(ctx, chi.inverse(order));
  return acc;
}

RecursionReport verify_recursion(const JBundle& series, const LegSpec& leg) {
  const auto& ctx = series.ctx;
  validate_leg(*ctx, leg);
  require_root(*ctx, leg.m);
  RecursionReport report{leg, {}, true};
  if (series.truncation < leg.m) return report;

  const Monomial lambda = Monomial::ratio(*ctx, leg.i, leg.j);
  const PoleLocus principal = principal_locus(*ctx, leg.m, lambda);
  const Character q0 = principal.pole_point(ctx->root_order());
  const TorusScalar factor = (phi_value(ctx, leg.i) * c_coeff_inverse(ctx, leg)).times(make_rational(-1, leg.m));

  for (int d = leg.m; d <= series.truncation; ++d) {
    RecursionEntry e{d, TorusScalar(ctx), TorusScalar(ctx), false, {}};
    try {
      e.lhs = qf_residue(series.at(leg.i, d), principal);
    } catch (const NotAPole&) {
      e.note = "no pole at the principal root; residue taken as 0";
    }
    try {
      e.rhs = factor * qf_eval(series.at(leg.j, d - leg.m), q0);
      e.pass = scalar_eq(e.lhs, e.rhs);
    } catch (const PoleHit& err) {
      e.note = std::string("pole hit evaluating the right side: ") + err.what();
    }
    report.pass = report.pass && e.pass;
    report.entries.push_back(std::move(e));
  }
  return report;
}

void check_pole_simplicity(const JBundle& series) {
  const auto& ctx = series.ctx;
  for (std::size_t i = 0; i < series.components.size(); ++i) {
    for (int d = 0; d <= series.truncation; ++d) {
      std::map<PoleLocus, int> loci;
      for (const auto& [factor, k] : series.components[i].at(d).denominator()) {
        if (factor.mu.is_identity()) continue;
        for (const auto& locus : split_factor(*ctx, factor.a, factor.mu)) {
          if ((loci[locus] += k) > 1) {
            throw UnsupportedOrder("component " + std::to_string(i) + " at degree " + std::to_string(d) +
                                   " has a repeated pole away from the roots of unity");
          }
        }
      }
    }
  }
}

std::vector<PolePart> extract_pole_part(const JBundle& series, int i, int d) {
  const auto& ctx = series.ctx;
  const int order = ctx->root_order();
  if (i < 0 || i > ctx->dimension()) throw DomainError("fixed point index out of range");
  if (d - 1 > series.truncation) throw DomainError("series is not known through degree " + std::to_string(d - 1));
  std::vector<PolePart> out;
  const TorusScalar phi = phi_value(ctx, i);
  for (int j = 0; j < ctx->num_vars(); ++j) {
    if (j == i) continue;
    for (int m = 1; m <= d; ++m) {
      const LegSpec leg{i, j, m};
      require_root(*ctx, m);
      const Monomial lambda = Monomial::ratio(*ctx, i, j);
      const Monomial root = *lambda.root(m);
      std::vector<TorusScalar> coeffs(static_cast<std::size_t>(m), TorusScalar(ctx));
      for (int k = 0; k < m; ++k) {
        const Character nu = Character::make(*ctx, static_cast<std::int64_t>(k) * (order / m), root);
        const TorusScalar value = qf_eval(series.at(j, d - m), nu.inverse(order));
        const TorusScalar h = (phi * c_coeff_inverse(ctx, leg, k) * value).times(make_rational(1, m));
        // sum_k h_k / (1 - q nu_k) = sum_{p<m} q^p sum_k h_k nu_k^p / (1 - q^m lambda)
        for (int p = 0; p < m; ++p) coeffs[static_cast<std::size_t>(p)] += h.times(nu.pow(p, order));
      }
      QFunction::Numerator num;
      for (int p = 0; p < m; ++p)
        if (!coeffs[static_cast<std::size_t>(p)].is_zero()) num.emplace(p, coeffs[static_cast<std::size_t>(p)]);
      QFunction::Denominator den;
      den[QFactor{m, lambda}] = 1;
      out.push_back({leg, QFunction::from_parts(ctx, std::move(num), std::move(den))});
    }
  }
  return out;
}

ReferenceOracle::ReferenceOracle(JBundle series) : series_(std::move(series)) {}

QFunction ReferenceOracle::unity_part(int i, int d, const JBundle&, const QFunction&) const {
  const auto& ctx = series_.ctx;
  if (d > series_.truncation) throw OracleError("reference oracle has no data at degree " + std::to_string(d));
  if (d == 0) return QFunction(ctx);
  const auto pf = qf_partial_fractions(series_.at(i, d));
  QFunction acc(ctx);
  for (const auto& t : pf.fraction_terms)
    if (t.locus.is_root_of_unity()) acc += elementary_fraction(ctx, t.locus, t.order).times(t.coeff);
  return acc;
}

JBundle reconstruct(const ContextPtr& ctx, int max_degree, const VertexOracle& oracle, Exec exec) {
  if (max_degree < 0) throw DomainError("truncation must be non-negative");
  const int need = default_root_order(max_degree);
  if (ctx->root_order() % need != 0) throw RootOrderExceeded("root order must be divisible by lcm(1.." + std::to_string(max_degree) + ")");
  const int n = ctx->num_vars();
  JBundle known{ctx, 0, {}};
  for (int i = 0; i < n; ++i)
    known.components.push_back({0, {QFunction::binomial(ctx, 1, Character::of(Monomial::identity(*ctx)))}});

  for (int d = 1; d <= max_degree; ++d) {
    std::vector<QFunction> next(static_cast<std::size_t>(n), QFunction(ctx));
    auto step = [&](int i) {
      QFunction extracted(ctx);
      for (const auto& part : extract_pole_part(known, i, d)) extracted += part.part;
      next[static_cast<std::size_t>(i)] = extracted + oracle.unity_part(i, d, known, extracted);
    };
    if (exec == Exec::parallel) {
      std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < n; ++i) {
        try {
          step(i);
        } catch (...) {
#pragma omp critical
          if (!failure) failure = std::current_exception();
        }
      }
      if (failure) std::rethrow_exception(failure);
    } else {
      for (int i = 0; i < n; ++i) step(i);
    }
    for (int i = 0; i < n; ++i) {
      auto& comp = known.components[static_cast<std::size_t>(i)];
      comp.coeffs.push_back(std::move(next[static_cast<std::size_t>(i)]));
      comp.truncation = d;
    }
    known.truncation = d;
  }
  return known;
}

TorusScalar lefschetz_trace(const ContextPtr& ctx, int k) {
  TorusScalar acc(ctx);
  for (int i = 0; i < ctx->num_vars(); ++i) {
    TorusScalar term = lambda_char(ctx, Monomial::variable(*ctx, i, k));
    for (int j = 0; j < ctx->num_vars(); ++j)
      if (j != i) term = term * TorusScalar::binomial_inverse(ctx, Character::of(Monomial::ratio(*ctx, i, j)));
    acc += term;
  }
  return acc;
}

TorusScalar lefschetz_residue_form(const ContextPtr& ctx, int k) {
  const int n = ctx->num_vars();
  TorusScalar acc(ctx);
  // At P = 0: P^{k-1} prod 1/(1 - P/Lambda_i) dP, coefficient of P^{-1}.
  if (k <= 0) {
    std::vector<Monomial> xs;
    for (int i = 0; i < n; ++i) xs.push_back(Monomial::variable(*ctx, i, -1));
    acc += TorusScalar(geometric_coefficient(ctx, xs, -k));
  }
  // At P = infinity, w = 1/P: the form is (-1)^n prod Lambda_i w^{n-k} prod 1/(1 - Lambda_i w) (-dw/w).
  if (k >= n) {
    std::vector<Monomial> xs;
    Monomial prod = Monomial::identity(*ctx);
    for (int i = 0; i < n; ++i) {
      xs.push_back(Monomial::variable(*ctx, i, 1));
      prod *= xs.back();
    }
    const Rational sign = n % 2 == 0 ? -1 : 1;
    acc += TorusScalar(geometric_coefficient(ctx, xs, k - n).times(Character::of(prod)).times(sign));
  }
  return acc;
}

Degree2Report verify_degree2_example(const Degree2Options& options) {
  const ContextPtr ctx = AlgebraContext::create(1, 2);
  const Monomial id = Monomial::identity(*ctx);
  const Monomial l = Monomial::ratio(*ctx, 0, 1);
  const Monomial s = *l.root(2);
  const TorusScalar half = TorusScalar::constant(ctx, make_rational(1, 2));
  const TorusScalar inv1 = TorusScalar::binomial_inverse(ctx, Character::of(l));
  const TorusScalar inv2 = TorusScalar::binomial_inverse(ctx, Character::of(l.pow(2)));
  const TorusScalar lv = lambda_char(ctx, l);

  // 1/(2(1-l)^2(1-q)) + 1/(2(1-l^2)(1+q)) + l^3/((1-l)(1-l^2)(1-lq)) - sum_+- l/(2(1-l)(1+-s)(1+-s q))
  std::vector<std::pair<PoleLocus, TorusScalar>> terms{
      {PoleLocus{0, id}, half * inv1 * inv1},
      {PoleLocus{1, id}, half * inv2},
      {PoleLocus{0, l}, lv.pow(3) * inv1 * inv2},
      {PoleLocus{1, s}, -(half * lv * inv1 * TorusScalar::binomial_inverse(ctx, Character{1, s}))},
      {PoleLocus{0, s}, -(half * lv * inv1 * TorusScalar::binomial_inverse(ctx, Character::of(s)))},
  };
  // The same coefficients at lambda = 4, sqrt(lambda) = 2, next to their linear factors 1 - root q.
  std::vector<Rational> special{make_rational(1, 18), make_rational(-1, 30), make_rational(64, 45), make_rational(2, 9),
                                make_rational(-2, 3)};
  const std::vector<Rational> roots{1, -1, 4, -2, 2};
  if (options.tamper) {
    const auto t = static_cast<std::size_t>(*options.tamper);
    if (t >= terms.size()) throw DomainError("tamper index must be in 0..4");
    terms[t].second += one(ctx);
    special[t] += 1;
  }

  const QFunction lhs = QFunction::factor_inverse(ctx, 2, Character::of(id)) *
                        QFunction::factor_inverse(ctx, 1, Character::of(l)) *
                        QFunction::factor_inverse(ctx, 2, Character::of(l));
  Degree2Report report;

  QFunction rhs(ctx);
  for (const auto& [locus, c] : terms) rhs += elementary_fraction(ctx, locus, 1).times(c);
  report.identity_holds = qf_eq(lhs, rhs);

  const auto pf = qf_partial_fractions(lhs);
  bool matches = pf.laurent_part.is_zero() && pf.fraction_terms.size() == terms.size();
  for (const auto& t : pf.fraction_terms) {
    bool found = false;
    for (const auto& [locus, c] : terms) {
      if (locus == t.locus && t.order == 1) found = scalar_eq(c, t.coeff);
    }
    matches = matches && found;
  }
  report.decomposition_matches = matches;

  // Over Q: 1 = sum_t c_t prod_{u != t} (1 - root_u q), and each c_t is the cover-up value.
  std::vector<Rational> total(roots.size(), Rational(0));
  bool cover_up = true;
  for (std::size_t t = 0; t < roots.size(); ++t) {
    std::vector<Rational> poly{special[t]};
    Rational value = 1;
    for (std::size_t u = 0; u < roots.size(); ++u) {
      if (u == t) continue;
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t k = 0; k < poly.size(); ++k) {
        next[k] += poly[k];
        next[k + 1] -= poly[k] * roots[u];
      }
      poly = std::move(next);
      value *= 1 - roots[u] / roots[t];
    }
    for (std::size_t k = 0; k < poly.size(); ++k) total[k] += poly[k];
    cover_up = cover_up && special[t] == 1 / value;
  }
  bool identity = total[0] == 1;
  for (std::size_t k = 1; k < total.size(); ++k) identity = identity && total[k] == 0;
  report.specialized_holds = identity && cover_up;
  report.specialized_coeffs = special;
  return report;
}

}  // namespace qkloc
