#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "qkloc/qfunction.hpp"

namespace qkloc::testing {

TorusScalar random_scalar(const ContextPtr& ctx, std::mt19937_64& rng);
QFunction random_poly(const ContextPtr& ctx, std::mt19937_64& rng, int lo, int hi);
// a <= 3, at most 3 factors, loci split within M = 6.
QFunction random_rational(const ContextPtr& ctx, std::mt19937_64& rng);

struct Outcome {
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return cases > 0 && failures == 0; }
  void record(bool pass, const std::string& what);
};

// Each runs `cases` randomized instances from a fixed seed and counts failures.
Outcome partial_fraction_recombination(int cases, std::uint64_t seed = 424242);
Outcome kpm_split_resum(int cases, std::uint64_t seed = 31337);
Outcome residue_additivity(int cases, std::uint64_t seed = 17);
Outcome sum_over_roots(int cases, std::uint64_t seed = 2718);
Outcome basis_round_trip(int cases, std::uint64_t seed = 1234);
Outcome cyclotomic_homomorphism(int cases, std::uint64_t seed = 20151);

}  // namespace qkloc::testing
