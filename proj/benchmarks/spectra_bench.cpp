#include "symwalk/distances.hpp"
#include "symwalk/spectra.hpp"

#include <benchmark/benchmark.h>

using namespace symwalk;

static void BM_TranspositionSpectrum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(random_transposition_measure(n), Group::Sn));
}
BENCHMARK(BM_TranspositionSpectrum)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_DiscreteDistance(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = spectrum(random_transposition_measure(n), Group::Sn);
  const auto t = static_cast<std::uint64_t>(n * std::log(n));
  for (auto _ : state) benchmark::DoNotOptimize(l2_discrete(s, t));
}
BENCHMARK(BM_DiscreteDistance)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_ContinuousProfile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto s = spectrum(random_transposition_measure(n), Group::Sn);
  std::vector<Real> grid;
  for (int i = 0; i <= 40; ++i) grid.push_back(Real(i) * n / 20 * log(Real(n)));
  for (auto _ : state) benchmark::DoNotOptimize(build_profile(s, "rt", grid, TimeMode::continuous));
}
BENCHMARK(BM_ContinuousProfile)->Arg(30)->Unit(benchmark::kMillisecond);
