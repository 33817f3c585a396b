#include <random>

#include <benchmark/benchmark.h>

#include "freeidem/generators.hpp"
#include "freeidem/solver.hpp"

using namespace freeidem;

namespace {

  std::vector<std::pair<Word, Word>> rewrite_pairs(BiorderedSet const& b, std::size_t count, std::size_t len) {
    std::mt19937_64                         rng(7);
    std::uniform_int_distribution<Element> letter(0, static_cast<Element>(b.size() - 1));
    std::vector<std::pair<Word, Word>>      out;
    for (std::size_t k = 0; k < count; ++k) {
      Word w(len);
      for (auto& x : w) {
        x = letter(rng);
      }
      out.emplace_back(w, random_rewrite(b, w, 30, rng()));
    }
    return out;
  }

}  // namespace

static void BM_DecideTn(benchmark::State& state) {
  Structure s(BiorderedSet::validate_and_build(transformation_biorder(state.range(0))));
  auto const pairs = rewrite_pairs(s.biorder(), 64, static_cast<std::size_t>(state.range(1)));
  // warm the lazily built subgroups and contact automata
  for (auto const& [u, v] : pairs) {
    (void) decide(s, u, v);
  }
  std::size_t k = 0;
  for (auto _ : state) {
    auto const& [u, v] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(decide(s, u, v).verdict);
  }
}
BENCHMARK(BM_DecideTn)->ArgsProduct({{3, 4}, {4, 8, 16}})->Unit(benchmark::kMicrosecond);

static void BM_DecideRectBand(benchmark::State& state) {
  Structure  s(BiorderedSet::validate_and_build(rectangular_band(3, 3)));
  auto const pairs = rewrite_pairs(s.biorder(), 64, static_cast<std::size_t>(state.range(0)));
  std::size_t k = 0;
  for (auto _ : state) {
    auto const& [u, v] = pairs[k++ % pairs.size()];
    benchmark::DoNotOptimize(decide(s, u, v).verdict);
  }
}
BENCHMARK(BM_DecideRectBand)->RangeMultiplier(4)->Range(4, 64)->Unit(benchmark::kMicrosecond);
