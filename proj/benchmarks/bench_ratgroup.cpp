#include <random>

#include <benchmark/benchmark.h>

#include "freeidem/ratgroup.hpp"

using namespace freeidem;

namespace {

  GroupNfa random_nfa(std::size_t states, std::size_t edges, int gens, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    GroupNfa        n;
    n.num_states = states;
    n.initial    = {0};
    n.final      = {states - 1};
    for (std::size_t k = 0; k < edges; ++k) {
      auto const label = static_cast<GroupLetter>(static_cast<int>(rng() % (2 * gens + 1)) - gens);
      n.add_edge(rng() % states, rng() % states, label);
    }
    return n;
  }

}  // namespace

static void BM_BenoisSaturate(benchmark::State& state) {
  auto const states = static_cast<std::size_t>(state.range(0));
  auto const n      = random_nfa(states, 3 * states, 3, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(benois_saturate(n));
  }
}
BENCHMARK(BM_BenoisSaturate)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

static void BM_RationalIntersection(benchmark::State& state) {
  auto const states = static_cast<std::size_t>(state.range(0));
  auto const a      = random_nfa(states, 3 * states, 3, 12);
  auto const b      = random_nfa(states, 3 * states, 3, 13);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rat_intersect_nonempty(a, b));
  }
}
BENCHMARK(BM_RationalIntersection)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMicrosecond);
