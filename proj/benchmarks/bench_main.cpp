#include "betaram/functions.hpp"
#include "betaram/identities.hpp"
#include "betaram/kernels.hpp"
#include "betaram/registry.hpp"
#include "betaram/series.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace betaram;

void BM_ln_gamma(benchmark::State& state) {
  double x = 0.37;
  for (auto _ : state) benchmark::DoNotOptimize(ln_gamma(x));
}
BENCHMARK(BM_ln_gamma);

void BM_psi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psi(0.37));
}
BENCHMARK(BM_psi);

void BM_polygamma(benchmark::State& state) {
  const PolygammaOrder o{static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(polygamma(o, 0.37));
}
BENCHMARK(BM_polygamma)->Arg(1)->Arg(4)->Arg(8);

void BM_zeta(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(zeta(3.5));
}
BENCHMARK(BM_zeta);

void BM_big_b(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(big_b(0.37));
}
BENCHMARK(BM_big_b);

void BM_d_func(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(d_func(0.37));
}
BENCHMARK(BM_d_func);

void BM_hs_eval(benchmark::State& state) {
  const HsQuery q{static_cast<double>(state.range(0)), 1e-10};
  for (auto _ : state) benchmark::DoNotOptimize(hs_eval(q));
}
BENCHMARK(BM_hs_eval)->Arg(1)->Arg(2)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_b_hyper_sum_1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(b_hyper_sum_1(0.37, 1e-11));
}
BENCHMARK(BM_b_hyper_sum_1)->Unit(benchmark::kMicrosecond);

void BM_conjecture_coeffs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_coeffs(n));
}
BENCHMARK(BM_conjecture_coeffs)->Arg(50)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_verify_all(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_all());
}
BENCHMARK(BM_verify_all)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace

BENCHMARK_MAIN();
