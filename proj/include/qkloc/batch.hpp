#pragma once

#include <vector>

#include "qkloc/localization.hpp"

namespace qkloc {

// Every ordered pair i != j with multiplicity 1..max_m.
std::vector<LegSpec> all_legs(const AlgebraContext& ctx, int max_m);

// product == tangent for each leg.
std::vector<bool> c_coeff_agreement(const ContextPtr& ctx, const std::vector<LegSpec>& legs, Exec exec = Exec::parallel);

std::vector<RecursionReport> verify_recursion_batch(const JBundle& series, const std::vector<LegSpec>& legs,
                                                    Exec exec = Exec::parallel);

// lefschetz_trace == lefschetz_residue_form for each k.
std::vector<bool> lefschetz_agreement(const ContextPtr& ctx, const std::vector<int>& ks, Exec exec = Exec::parallel);

}  // namespace qkloc
