#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ccbench/color.hpp"
#include "ccbench/estimators.hpp"
#include "ccbench/stats.hpp"
#include "synthetic.hpp"

namespace {

using namespace ccbench;

static void BM_ReproductionError(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<Chromaticity> pool;
  for (int i = 0; i < 1024; ++i) pool.push_back(testing::random_chromaticity(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(reproduction_error(pool[i & 1023], pool[(i + 1) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_ReproductionError);

static void BM_TwoIlluminantError(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::vector<Chromaticity> pool;
  for (int i = 0; i < 1024; ++i) pool.push_back(testing::random_chromaticity(rng));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        two_illuminant_error(pool[i & 1023], pool[(i + 1) & 1023], pool[(i + 2) & 1023], pool[(i + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_TwoIlluminantError);

static void BM_Summarize(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::lognormal_distribution<double> err(0.5, 0.8);
  std::vector<double> v(static_cast<std::size_t>(state.range(0)));
  for (double& x : v) x = err(rng);
  for (auto _ : state) benchmark::DoNotOptimize(summarize(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Summarize)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

static void BM_Estimator(benchmark::State& state, const char* name) {
  std::mt19937_64 rng(4);
  const SceneRecord r = testing::gray_world_scene("b", 256, 192, testing::random_chromaticity(rng), rng);
  const Estimator e = Estimator::from_name(name);
  for (auto _ : state) benchmark::DoNotOptimize(e.estimate(r));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(r.raster.pixel_count()));
}
BENCHMARK_CAPTURE(BM_Estimator, gray_world, "gray_world");
BENCHMARK_CAPTURE(BM_Estimator, shades_of_gray, "shades_of_gray");
BENCHMARK_CAPTURE(BM_Estimator, gray_edge, "gray_edge");

}  // namespace

BENCHMARK_MAIN();
