#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "pixtopo/generate.hpp"
#include "pixtopo/incremental.hpp"
#include "pixtopo/invariants.hpp"

using namespace pixtopo;

namespace {

void BM_Analyze(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DigitalObject d = generate_random(side, side, 0.5, 8);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(d));
  state.SetItemsProcessed(state.iterations() * std::int64_t{side} * side);
}
BENCHMARK(BM_Analyze)->Arg(64)->Arg(256)->Arg(1000)->Unit(benchmark::kMillisecond);

// Sparse objects spread over a huge extent; the compressed raster keeps this
// proportional to the pixel count.
void BM_AnalyzeSparse(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<PixelCoord> px;
  for (int k = 0; k < state.range(0); ++k)
    px.push_back({static_cast<int>(rng() % 1'000'000), static_cast<int>(rng() % 1'000'000)});
  const DigitalObject d(std::move(px));
  for (auto _ : state) benchmark::DoNotOptimize(analyze(d));
}
BENCHMARK(BM_AnalyzeSparse)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_TrackerInsert(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const DigitalObject d = generate_random(side, side, 0.5, 8);
  std::vector<PixelCoord> order(d.begin(), d.end());
  std::shuffle(order.begin(), order.end(), std::mt19937_64(8));
  for (auto _ : state) {
    Tracker tracker;
    for (const PixelCoord p : order) tracker.add_pixel(p);
    benchmark::DoNotOptimize(tracker.snapshot());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(order.size()));
}
BENCHMARK(BM_TrackerInsert)->Arg(64)->Arg(256)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
