#include <benchmark/benchmark.h>

#include "autoeq/subset_algebra.hpp"
#include "autoeq/symmetric_group.hpp"

using namespace autoeq;

static void BM_IsotypicDims(benchmark::State& state) {
  const GradedDims v{{0, 1}, {2, 1}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_dims(v, n, Character::sign));
}
BENCHMARK(BM_IsotypicDims)->DenseRange(2, 12, 2);

static void BM_IsotypicDimsK3(benchmark::State& state) {
  const GradedDims v{{0, 1}, {2, 22}, {4, 1}};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_dims(v, n, Character::trivial));
}
BENCHMARK(BM_IsotypicDimsK3)->DenseRange(2, 12, 2);

static void BM_BruteForceProjector(benchmark::State& state) {
  const SubsetAlgebra alg(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_isotypic(alg, Character::trivial));
}
BENCHMARK(BM_BruteForceProjector)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_InvariantSubalgebra(benchmark::State& state) {
  const SubsetAlgebra alg(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invariant_subalgebra(alg, Character::trivial));
}
BENCHMARK(BM_InvariantSubalgebra)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);
