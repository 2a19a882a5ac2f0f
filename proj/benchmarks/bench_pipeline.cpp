#include <benchmark/benchmark.h>

#include <random>

#include "ais/analogy/grid.hpp"
#include "ais/imaging/morphology.hpp"
#include "ais/orchestrator/scenes.hpp"
#include "ais/representations/representations.hpp"
#include "ais/vectorizer/layers.hpp"

namespace {

using ais::imaging::BinaryImage;

BinaryImage scene_mask(int size) {
  return BinaryImage::from_raster(
      ais::imaging::to_grayscale(ais::orchestrator::synthetic_scene("stacked", size).image));
}

void BM_Skeletonize(benchmark::State& state) {
  const BinaryImage mask = scene_mask(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ais::imaging::skeletonize(mask));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(mask.pixel_count()));
}
BENCHMARK(BM_Skeletonize)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Erode(benchmark::State& state) {
  const BinaryImage mask = scene_mask(1024);
  const ais::imaging::StructuringDisk disk(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ais::imaging::erode(mask, disk));
}
BENCHMARK(BM_Erode)->Arg(3)->Arg(25)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_Vectorize(benchmark::State& state) {
  const auto img = ais::orchestrator::synthetic_scene("blobs_on_sky", static_cast<int>(state.range(0))).image;
  for (auto _ : state) benchmark::DoNotOptimize(ais::vectorizer::vectorize(img, {}));
}
BENCHMARK(BM_Vectorize)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_Backbone(benchmark::State& state) {
  const auto img = ais::orchestrator::synthetic_scene("stacked", static_cast<int>(state.range(0))).image;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ais::representations::build_backbone(img, {}));
  }
}
BENCHMARK(BM_Backbone)->Arg(512)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_ComposeGrid(benchmark::State& state) {
  const auto p = ais::orchestrator::synthetic_scene("disk", 1024).image;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ais::analogy::compose_grid(p, p, p, std::nullopt, 512));
  }
}
BENCHMARK(BM_ComposeGrid)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
