#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <vector>

#include "stmax/gf2.hpp"
#include "stmax/simplicial.hpp"

using namespace stmax;

namespace {

BitMatrix random_dense(std::size_t n, double density) {
  std::mt19937_64 rng(12345);
  std::bernoulli_distribution bit(density);
  BitMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (bit(rng)) m.set(r, c);
  return m;
}

// Boundary-like sparse columns: few entries, clustered rows. Keeps fill-in
// realistic; uniformly random columns would degenerate to the dense case.
std::vector<std::vector<std::int32_t>> banded_sparse(std::size_t nrows, std::size_t ncols,
                                                     int per_col, int band) {
  std::mt19937_64 rng(54321);
  std::uniform_int_distribution<std::int32_t> start(0, static_cast<std::int32_t>(nrows) - band);
  std::uniform_int_distribution<std::int32_t> offset(0, band - 1);
  std::vector<std::vector<std::int32_t>> cols(ncols);
  for (auto& c : cols) {
    std::int32_t base = start(rng);
    std::vector<std::int32_t> picks;
    for (int i = 0; i < per_col; ++i) picks.push_back(base + offset(rng));
    std::sort(picks.begin(), picks.end());
    picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
    c = std::move(picks);
  }
  return cols;
}

// Top boundary matrix of the n-fold subdivided torus.
ChainComplexF2 subdivided_torus(int n) {
  SimplicialComplex K = torus_7();
  for (int i = 0; i < n; ++i) K = K.barycentric_subdivision();
  return K.chain_complex();
}

}  // namespace

static void BM_DenseRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BitMatrix m = random_dense(n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DenseRank)->Range(64, 2048)->Complexity();

static void BM_SparseRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto cols = banded_sparse(n, n, 6, 96);
  for (auto _ : state) benchmark::DoNotOptimize(sparse_boundary_rank(cols, n));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SparseRank)->Range(1024, 32768)->Complexity();

static void BM_TorusBoundaryRank(benchmark::State& state) {
  ChainComplexF2 C = subdivided_torus(static_cast<int>(state.range(0)));
  const auto& d2 = C.boundaries[2];
  for (auto _ : state) benchmark::DoNotOptimize(boundary_rank(d2, C.ranks[1]));
  state.SetLabel(std::to_string(d2.size()) + " columns");
}
BENCHMARK(BM_TorusBoundaryRank)->DenseRange(1, 3);

static void BM_KernelBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  BitMatrix m = random_dense(n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(m.kernel_basis());
}
BENCHMARK(BM_KernelBasis)->Range(64, 1024);

BENCHMARK_MAIN();
