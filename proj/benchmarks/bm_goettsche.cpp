#include <benchmark/benchmark.h>

#include "stmax/goettsche.hpp"

using namespace stmax;

static void BM_HilbSeriesQuartic(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hilb_betti_series({1, 0, 22, 0, 1}, n_max));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HilbSeriesQuartic)->RangeMultiplier(2)->Range(4, 64)->Complexity();

static void BM_HilbSeriesAbelian(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(hilb_betti_series({1, 4, 6, 4, 1}, n_max));
}
BENCHMARK(BM_HilbSeriesAbelian)->RangeMultiplier(2)->Range(4, 64);

// Wide second row: large coefficients exercise the big-integer layer.
static void BM_HilbSeriesWide(benchmark::State& state) {
  const long long b2 = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(hilb_betti_series({1, 0, b2, 0, 1}, 12));
}
BENCHMARK(BM_HilbSeriesWide)->Range(32, 512);

BENCHMARK_MAIN();
