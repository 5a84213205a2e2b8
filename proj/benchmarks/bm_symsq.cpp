#include <benchmark/benchmark.h>

#include "stmax/simplicial.hpp"
#include "stmax/surface_profile.hpp"
#include "stmax/symmetric_square.hpp"

using namespace stmax;

namespace {

RealComponent surface_case(int i) {
  switch (i) {
    case 0: return RealComponent::sphere();
    case 1: return RealComponent::orientable_genus(1);
    case 2: return RealComponent::nonorientable_crosscaps(1);
    default: return RealComponent::nonorientable_crosscaps(2);
  }
}

}  // namespace

static void BM_SymmetricSquare(benchmark::State& state) {
  RealComponent s = surface_case(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(symmetric_square_oracle(s));
}
BENCHMARK(BM_SymmetricSquare)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_ProductHomologyTori(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(product_betti(torus_grid(), torus_grid()));
}
BENCHMARK(BM_ProductHomologyTori)->Unit(benchmark::kMillisecond);

static void BM_SubdividedTorusHomology(benchmark::State& state) {
  SimplicialComplex sd = torus_7().barycentric_subdivision().barycentric_subdivision();
  for (auto _ : state) benchmark::DoNotOptimize(homology_ranks(sd));
}
BENCHMARK(BM_SubdividedTorusHomology)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
