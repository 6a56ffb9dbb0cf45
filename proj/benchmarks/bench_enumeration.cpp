#include <benchmark/benchmark.h>

#include "subgame/enumeration.hpp"

namespace {

using subgame::MoveSet;

void bm_enumerate_seeds(benchmark::State& state) {
  const auto b = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subgame::enumerate_seeds(MoveSet{3, b}));
}
BENCHMARK(bm_enumerate_seeds)->DenseRange(7, 19, 4)->Unit(benchmark::kMillisecond);

void bm_cycle_lengths(benchmark::State& state) {
  const auto b = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subgame::cycle_lengths(MoveSet{1, b, b + 1}));
}
BENCHMARK(bm_cycle_lengths)->DenseRange(11, 27, 4)->Unit(benchmark::kMillisecond);

}  // namespace
