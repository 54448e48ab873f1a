#include "symwalk/characters.hpp"

#include <benchmark/benchmark.h>

using namespace symwalk;

// Cold table every iteration: the full 4-cycle column of S_n.
static void BM_FourCycleColumnCold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto parts = enumerate_partitions(n);
  const auto alpha = CycleType::cycle(4, n);
  for (auto _ : state) {
    CharacterTable table;
    for (const auto& lambda : parts) benchmark::DoNotOptimize(table.character(lambda, alpha));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(parts.size()));
}
BENCHMARK(BM_FourCycleColumnCold)->Arg(12)->Arg(18)->Arg(25)->Unit(benchmark::kMillisecond);

static void BM_HookDimension(benchmark::State& state) {
  const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& lambda : parts) benchmark::DoNotOptimize(dimension(lambda));
}
BENCHMARK(BM_HookDimension)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_MomentRatio(benchmark::State& state) {
  const auto parts = enumerate_partitions(static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& lambda : parts) benchmark::DoNotOptimize(r4_exact(lambda));
}
BENCHMARK(BM_MomentRatio)->Arg(25)->Unit(benchmark::kMillisecond);
