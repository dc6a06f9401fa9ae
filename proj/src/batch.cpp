#include "qkloc/batch.hpp"

#include <exception>

namespace qkloc {

namespace {

// Runs body(t) for t in [0, n), rethrowing the first exception after the loop.
template <class Body>
void run(int n, Exec exec, Body&& body) {
  if (exec == Exec::serial) {
    for (int t = 0; t < n; ++t) body(t);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (int t = 0; t < n; ++t) {
    try {
      body(t);
    } catch (...) {
#pragma omp critical(qkloc_batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<LegSpec> all_legs(const AlgebraContext& ctx, int max_m) {
  std::vector<LegSpec> legs;
  for (int m = 1; m <= max_m; ++m)
    for (int i = 0; i < ctx.num_vars(); ++i)
      for (int j = 0; j < ctx.num_vars(); ++j)
        if (i != j) legs.push_back({i, j, m});
  return legs;
}

std::vector<bool> c_coeff_agreement(const ContextPtr& ctx, const std::vector<LegSpec>& legs, Exec exec) {
  std::vector<char> ok(legs.size(), 0);
  run(static_cast<int>(legs.size()), exec, [&](int t) {
    const auto& leg = legs[static_cast<std::size_t>(t)];
    ok[static_cast<std::size_t>(t)] = scalar_eq(c_coeff(ctx, leg, CMethod::product), c_coeff(ctx, leg, CMethod::tangent));
  });
  return {ok.begin(), ok.end()};
}

std::vector<RecursionReport> verify_recursion_batch(const JBundle& series, const std::vector<LegSpec>& legs, Exec exec) {
  std::vector<RecursionReport> out(legs.size());
  run(static_cast<int>(legs.size()), exec,
      [&](int t) { out[static_cast<std::size_t>(t)] = verify_recursion(series, legs[static_cast<std::size_t>(t)]); });
  return out;
}

std::vector<bool> lefschetz_agreement(const ContextPtr& ctx, const std::vector<int>& ks, Exec exec) {
  std::vector<char> ok(ks.size(), 0);
  run(static_cast<int>(ks.size()), exec, [&](int t) {
    const int k = ks[static_cast<std::size_t>(t)];
    ok[static_cast<std::size_t>(t)] = scalar_eq(lefschetz_trace(ctx, k), lefschetz_residue_form(ctx, k));
  });
  return {ok.begin(), ok.end()};
}

}  // namespace qkloc
