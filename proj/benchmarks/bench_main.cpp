#include <benchmark/benchmark.h>

#include "meixner/meixner.hpp"

using namespace meixner;

static void BM_Recurrence(benchmark::State& state) {
  const MPParams p(1.3, 0.9);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_recurrence(p, 0.7, N));
  state.SetComplexityN(N);
}
BENCHMARK(BM_Recurrence)->RangeMultiplier(4)->Range(8, 500)->Complexity();

static void BM_HypergeometricRoute(benchmark::State& state) {
  const MPParams p(1.3, 0.9);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eval_hyp(p, 0.7, n));
}
BENCHMARK(BM_HypergeometricRoute)->Arg(10)->Arg(30);

static void BM_LogGamma(benchmark::State& state) {
  Complex z{0.3, -2.7};
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

static void BM_GramMatrix(benchmark::State& state) {
  const MPParams p(1.0, kPi / 2.0);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(orthogonality_matrix(p, N, {}));
}
BENCHMARK(BM_GramMatrix)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_QIntegral(benchmark::State& state) {
  const MPParams p(1.3, 0.9);
  const double im = static_cast<double>(state.range(0)) / 4.0;
  for (auto _ : state) benchmark::DoNotOptimize(weighted_cauchy(p, Complex(0.4, im), 3));
}
BENCHMARK(BM_QIntegral)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_Q0Contour(benchmark::State& state) {
  const MPParams p(1.3, 0.9);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_q0_closed(p, Complex(0.4, 1.0)));
}
BENCHMARK(BM_Q0Contour)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
