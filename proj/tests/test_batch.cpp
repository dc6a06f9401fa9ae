#include "doctest.h"
#include "qkloc/batch.hpp"
#include "qkloc/errors.hpp"
#include "support.hpp"

using namespace qkloc;
using namespace qkloc::testing;

TEST_CASE("all_legs enumerates ordered pairs") {
  auto ctx = session(2, 12);
  CHECK(all_legs(*ctx, 4).size() == 24);
  CHECK(all_legs(*session(0, 1), 3).empty());
}

TEST_CASE("parallel C sweep matches the serial reference") {
  for (int n = 1; n <= 3; ++n) {
    auto ctx = session(n, 12);
    const auto legs = all_legs(*ctx, 4);
    const auto serial = c_coeff_agreement(ctx, legs, Exec::serial);
    const auto parallel = c_coeff_agreement(ctx, legs, Exec::parallel);
    CHECK(serial == parallel);
    for (bool ok : serial) CHECK(ok);
  }
}

TEST_CASE("parallel recursion batch matches the serial reference") {
  auto ctx = session(2, 12);
  const JBundle series = j_series(ctx, 4);
  const auto legs = all_legs(*ctx, 3);
  const auto serial = verify_recursion_batch(series, legs, Exec::serial);
  const auto parallel = verify_recursion_batch(series, legs, Exec::parallel);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t t = 0; t < serial.size(); ++t) {
    CHECK(serial[t].pass == parallel[t].pass);
    REQUIRE(serial[t].entries.size() == parallel[t].entries.size());
    for (std::size_t e = 0; e < serial[t].entries.size(); ++e) {
      CHECK(scalar_eq(serial[t].entries[e].lhs, parallel[t].entries[e].lhs));
      CHECK(scalar_eq(serial[t].entries[e].rhs, parallel[t].entries[e].rhs));
    }
  }
}

TEST_CASE("parallel Lefschetz batch matches the serial reference") {
  auto ctx = session(2, 1);
  const std::vector<int> ks{-4, -3, -2, -1, 0, 1, 2, 3, 4};
  CHECK(lefschetz_agreement(ctx, ks, Exec::serial) == lefschetz_agreement(ctx, ks, Exec::parallel));
}

TEST_CASE("batch failures propagate") {
  auto ctx = session(1, 2);
  const JBundle series = j_series(ctx, 2);
  CHECK_THROWS_AS(verify_recursion_batch(series, {{0, 1, 3}}, Exec::parallel), RootOrderExceeded);
  CHECK_THROWS_AS(verify_recursion_batch(series, {{0, 1, 3}}, Exec::serial), RootOrderExceeded);
}
