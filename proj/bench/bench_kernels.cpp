#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "rmtlab/sampling.hpp"
#include "rmtlab/stats.hpp"

using namespace rmtlab;

namespace {

const ensembles::EnsembleKind kKind = ensembles::EnsembleKind::gpue();

void BM_DrawSerial(benchmark::State& state) {
  const ensembles::SamplerConfig cfg{1.0, 42, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampling::draw_spacings_serial(kKind, state.range(0), cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DrawParallel(benchmark::State& state) {
  const ensembles::SamplerConfig cfg{1.0, 42, static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sampling::draw_spacings(kKind, state.range(0), cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

const std::vector<double>& fixture() {
  static const auto sorted = [] {
    auto v = sampling::sample_spacings(kKind, 1 << 20, {1.0, 42, 1}).sample.normalized;
    std::sort(v.begin(), v.end());
    return v;
  }();
  return sorted;
}

void BM_KsSerial(benchmark::State& state) {
  const auto& s = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::ks_distance_serial(s, curves::CurveKind::GPUE));
  }
}

void BM_KsParallel(benchmark::State& state) {
  const auto& s = fixture();
  for (auto _ : state) {
    benchmark::DoNotOptimize(stats::ks_distance(s, curves::CurveKind::GPUE));
  }
}

}  // namespace

BENCHMARK(BM_DrawSerial)->Arg(200000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DrawParallel)->Args({200000, 1})->Args({200000, 2})->Args({200000, 4})
    ->Args({200000, 8})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KsParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
