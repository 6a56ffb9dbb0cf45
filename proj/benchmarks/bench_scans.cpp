#include <benchmark/benchmark.h>

#include "subgame/harness.hpp"

namespace {

void bm_scan_linear(benchmark::State& state) {
  const auto c = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subgame::scan_linear_bound(c));
}
BENCHMARK(bm_scan_linear)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void bm_scan_abc(benchmark::State& state) {
  const auto c = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(subgame::scan_abc_per_bc(c));
}
BENCHMARK(bm_scan_abc)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
