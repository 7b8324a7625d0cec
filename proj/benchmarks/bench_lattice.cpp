#include <benchmark/benchmark.h>

#include "autoeq/lattice.hpp"

using namespace autoeq;

static void BM_InducedClassMap(benchmark::State& state) {
  const auto lattice = MukaiLattice::k3(1);
  const auto t = reflection_isometry(lattice, lattice.structure_sheaf());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(induced_class_map(lattice, t, n));
}
BENCHMARK(BM_InducedClassMap)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_MuInjectivity(benchmark::State& state) {
  const auto lattice = MukaiLattice::k3(1);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mu_injectivity_check(lattice, lattice.structure_sheaf(), n, 50));
}
BENCHMARK(BM_MuInjectivity)->DenseRange(2, 8, 3);
