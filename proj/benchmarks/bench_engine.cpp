#include <benchmark/benchmark.h>

#include "subgame/engine.hpp"
#include "subgame/superpoly.hpp"

namespace {

using subgame::MoveSet;
using subgame::Seed;

void bm_generate(benchmark::State& state) {
  const MoveSet a{13, 29, 42};
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subgame::generate(a, Seed::none(a.alpha()), n));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(bm_generate)->RangeMultiplier(8)->Range(1 << 10, 1 << 19);

void bm_find_periodicity(benchmark::State& state) {
  const auto b = static_cast<std::uint32_t>(state.range(0));
  const MoveSet a{13, b, 13 + b};
  for (auto _ : state) benchmark::DoNotOptimize(subgame::find_periodicity(a));
}
BENCHMARK(bm_find_periodicity)->DenseRange(29, 149, 40);

void bm_find_periodicity_seeded(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const auto s = subgame::lemma_seed(n, 4 * n + 3);
  for (auto _ : state) benchmark::DoNotOptimize(subgame::find_periodicity(s.moves, s.seed));
}
BENCHMARK(bm_find_periodicity_seeded)->DenseRange(1, 8);

void bm_return_time_family(benchmark::State& state) {
  const auto f = subgame::super_family(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(subgame::return_time(f.moves, f.seed, 1ULL << 30));
}
BENCHMARK(bm_return_time_family)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
