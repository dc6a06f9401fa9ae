#include <benchmark/benchmark.h>

#include "qkloc/batch.hpp"

using namespace qkloc;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_JSeries(benchmark::State& state) {
  auto ctx = AlgebraContext::create(3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(j_series(ctx, 4, exec_of(state)));
  label(state);
}

void BM_CCoeffAgreement(benchmark::State& state) {
  auto ctx = AlgebraContext::create(3, 12);
  const auto legs = all_legs(*ctx, 4);
  for (auto _ : state) benchmark::DoNotOptimize(c_coeff_agreement(ctx, legs, exec_of(state)));
  label(state);
}

void BM_VerifyRecursion(benchmark::State& state) {
  auto ctx = AlgebraContext::create(2, 12);
  const JBundle series = j_series(ctx, 4);
  const auto legs = all_legs(*ctx, 4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_recursion_batch(series, legs, exec_of(state)));
  label(state);
}

void BM_Reconstruct(benchmark::State& state) {
  auto ctx = AlgebraContext::create(2, 6);
  const JBundle series = j_series(ctx, 3);
  const ReferenceOracle oracle(series);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(ctx, 3, oracle, exec_of(state)));
  label(state);
}

void BM_Lefschetz(benchmark::State& state) {
  auto ctx = AlgebraContext::create(3, 1);
  std::vector<int> ks;
  for (int k = -8; k <= 8; ++k) ks.push_back(k);
  for (auto _ : state) benchmark::DoNotOptimize(lefschetz_agreement(ctx, ks, exec_of(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_JSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CCoeffAgreement)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_VerifyRecursion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Reconstruct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Lefschetz)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
