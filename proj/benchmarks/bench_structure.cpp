#include <benchmark/benchmark.h>

#include "freeidem/generators.hpp"
#include "freeidem/structure.hpp"

using namespace freeidem;

static void BM_TnBiorder(benchmark::State& state) {
  auto const n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(BiorderedSet::validate_and_build(transformation_biorder(n)));
  }
}
BENCHMARK(BM_TnBiorder)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

// Green data, grids and every maximal subgroup.
static void BM_TnStructure(benchmark::State& state) {
  auto const b = BiorderedSet::validate_and_build(transformation_biorder(state.range(0)));
  for (auto _ : state) {
    Structure s(b);
    for (ClassId c = 0; c < s.num_classes(); ++c) {
      benchmark::DoNotOptimize(s.backend(c).kind());
    }
  }
  state.counters["idempotents"] = static_cast<double>(b.size());
}
BENCHMARK(BM_TnStructure)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_RectBandStructure(benchmark::State& state) {
  auto const b = BiorderedSet::validate_and_build(rectangular_band(state.range(0), state.range(0)));
  for (auto _ : state) {
    Structure s(b);
    benchmark::DoNotOptimize(s.backend(0).rank());
  }
}
BENCHMARK(BM_RectBandStructure)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);
