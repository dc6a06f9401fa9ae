#include "doctest.h"
#include "qkloc/errors.hpp"
#include "qkloc/jfunction.hpp"
#include "support.hpp"

using namespace qkloc;
using namespace qkloc::testing;

namespace {

Monomial permute(const Monomial& m, const std::vector<int>& perm) {
  Monomial::Storage s(m.size(), 0);
  for (std::size_t v = 0; v < m.size(); ++v) s[static_cast<std::size_t>(perm[v])] = m.scaled(v);
  return Monomial(s);
}

TorusScalar permute(const TorusScalar& t, const std::vector<int>& perm) {
  const auto& ctx = t.context();
  std::vector<LaurentPolynomial::Term> terms;
  for (const auto& term : t.numerator().terms()) terms.push_back({permute(term.mono, perm), term.coeff});
  std::vector<std::pair<Monomial, int>> factors;
  for (const auto& [y, k] : t.denominator()) factors.emplace_back(permute(y, perm), k);
  return TorusScalar::from_parts(LaurentPolynomial::from_terms(ctx, terms), Monomial::identity(*ctx), factors);
}

QFunction permute(const QFunction& f, const std::vector<int>& perm) {
  QFunction::Numerator num;
  for (const auto& [p, c] : f.numerator()) num.emplace(p, permute(c, perm));
  QFunction::Denominator den;
  for (const auto& [factor, k] : f.denominator()) den[QFactor{factor.a, permute(factor.mu, perm)}] += k;
  return QFunction::from_parts(f.context(), num, den);
}

}  // namespace

TEST_CASE("j_coeff examples") {
  auto ctx = session(1, 2);
  const Monomial id = Monomial::identity(*ctx);
  const Monomial l = lam(ctx);
  const QFunction j0 = j_coeff(ctx, 0, 0);
  CHECK(qf_eq(j0, qbinom(ctx, 1, id)));
  CHECK(j0.is_laurent());

  const QFunction j1 = j_coeff(ctx, 0, 1);
  CHECK(qf_eq(j1, qinv(ctx, 1, l)));
  REQUIRE(j1.denominator().size() == 1);
  CHECK(j1.denominator().begin()->first == QFactor{1, l});
  CHECK(j1.numerator().size() == 1);

  const QFunction j2 = j_coeff(ctx, 0, 2);
  CHECK(qf_eq(j2, qinv(ctx, 2, id) * qinv(ctx, 1, l) * qinv(ctx, 2, l)));
  CHECK(j2.denominator().size() == 3);

  CHECK_THROWS_AS(j_coeff(ctx, 2, 1), DomainError);
  CHECK_THROWS_AS(j_coeff(ctx, 0, -1), DomainError);
}

TEST_CASE("j_series examples") {
  auto c1 = session(1, 1);
  const JBundle b0 = j_series(c1, 0);
  REQUIRE(b0.components.size() == 2);
  for (int i = 0; i < 2; ++i) CHECK(qf_eq(b0.at(i, 0), qbinom(c1, 1, Monomial::identity(*c1))));

  auto c2 = session(1, 2);
  const JBundle b2 = j_series(c2, 2);
  CHECK(qf_eq(b2.at(0, 2), qinv(c2, 2, Monomial::identity(*c2)) * qinv(c2, 1, lam(c2)) * qinv(c2, 2, lam(c2))));

  auto c3 = session(2, 1);
  const JBundle b3 = j_series(c3, 1);
  CHECK(qf_eq(b3.at(0, 1), qinv(c3, 1, Monomial::ratio(*c3, 0, 1)) * qinv(c3, 1, Monomial::ratio(*c3, 0, 2))));

  CHECK_THROWS_AS(j_series(session(1, 1), 2), RootOrderExceeded);
  CHECK_THROWS_AS(j_series(session(1, 6), 4), RootOrderExceeded);
}

TEST_CASE("serial and parallel series agree") {
  auto ctx = session(2, 12);
  const JBundle a = j_series(ctx, 4, Exec::serial);
  const JBundle b = j_series(ctx, 4, Exec::parallel);
  CHECK(jbundle_eq(a, b));
  for (std::size_t i = 0; i < a.components.size(); ++i)
    for (int d = 0; d <= 4; ++d) CHECK(a.at(static_cast<int>(i), d).denominator() == b.at(static_cast<int>(i), d).denominator());
}

TEST_CASE("P-form examples") {
  auto ctx = session(1, 1);
  const PQFunction p0 = j_in_p_basis(ctx, 0);
  CHECK(p0.den.empty());
  CHECK(qf_eq(p0.restrict_to(0), qbinom(ctx, 1, Monomial::identity(*ctx))));
  const PQFunction p1 = j_in_p_basis(ctx, 1);
  CHECK(qf_eq(p1.restrict_to(0), qinv(ctx, 1, Monomial::ratio(*ctx, 0, 1))));
  CHECK(qf_eq(p1.restrict_to(1), qinv(ctx, 1, Monomial::ratio(*ctx, 1, 0))));
}

TEST_CASE("P-form restricts to the fixed-point components") {
  for (int n = 0; n <= 2; ++n) {
    auto ctx = session(n, 6);
    for (int d = 0; d <= 3; ++d) {
      const PQFunction p = j_in_p_basis(ctx, d);
      for (int i = 0; i <= n; ++i) CHECK(qf_eq(p.restrict_to(i), j_coeff(ctx, i, d)));
    }
  }
}

TEST_CASE("poles of the J-function lie on the allowed loci") {
  for (int n = 1; n <= 3; ++n) {
    auto ctx = session(n, 12);
    const JBundle b = j_series(ctx, 4);
    for (int i = 0; i <= n; ++i) {
      for (int d = 0; d <= 4; ++d) {
        for (const auto& [factor, k] : b.at(i, d).denominator()) {
          bool allowed = factor.mu.is_identity();
          for (int j = 0; j <= n; ++j)
            if (j != i && factor.mu == Monomial::ratio(*ctx, i, j)) allowed = true;
          CHECK(allowed);
          CHECK(factor.a <= d);
          if (!factor.mu.is_identity()) CHECK(k == 1);
        }
      }
    }
  }
}

TEST_CASE("j_coeff is equivariant under permutations") {
  auto ctx = session(2, 6);
  const std::vector<std::vector<int>> perms{{1, 0, 2}, {2, 0, 1}, {0, 2, 1}};
  for (const auto& perm : perms) {
    for (int i = 0; i <= 2; ++i) {
      for (int d = 0; d <= 3; ++d) {
        CHECK(qf_eq(permute(j_coeff(ctx, i, d), perm), j_coeff(ctx, perm[static_cast<std::size_t>(i)], d)));
      }
    }
  }
}
