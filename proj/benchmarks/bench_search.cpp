#include <benchmark/benchmark.h>

#include "parsearch/allocation/allocation.hpp"
#include "parsearch/parallel/hdastar.hpp"
#include "parsearch/parallel/spastar.hpp"
#include "parsearch/serial/astar.hpp"
#include "parsearch/serial/idastar.hpp"

using namespace parsearch;

static void BM_AStarEightPuzzle(benchmark::State& state) {
  TilePuzzle p(tile_random_solvable(3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(astar(p).cost);
}
BENCHMARK(BM_AStarEightPuzzle)->Unit(benchmark::kMicrosecond);

static void BM_IdaStarFifteenPuzzle(benchmark::State& state) {
  TilePuzzle p(tile_random_walk(4, 40, 2));
  for (auto _ : state) benchmark::DoNotOptimize(idastar(p).cost);
}
BENCHMARK(BM_IdaStarFifteenPuzzle)->Unit(benchmark::kMillisecond);

static void BM_AStarGrid(benchmark::State& state) {
  auto inst = grid_random(128, 128, 8, 0.2, 5);
  GridProblem p(std::make_shared<GridMap>(inst.map), {0, 0}, {127, 127});
  for (auto _ : state) benchmark::DoNotOptimize(astar(p).cost);
}
BENCHMARK(BM_AStarGrid)->Unit(benchmark::kMillisecond);

// Wall time on threads; only meaningful with as many cores as workers.
static void BM_HdaStarFifteenPuzzle(benchmark::State& state) {
  TilePuzzle p(tile_random_walk(4, 40, 2));
  HashConfig h;
  WorkDistribution<TilePuzzle> dist(p, h);
  EngineConfig config;
  config.workers = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto r = hdastar(p, dist, config);
    benchmark::DoNotOptimize(r.solution.cost);
    state.counters["CO"] = static_cast<double>(r.totals().sent) / static_cast<double>(r.totals().generated);
  }
}
BENCHMARK(BM_HdaStarFifteenPuzzle)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_HdaStarInterleaved(benchmark::State& state) {
  TilePuzzle p(tile_random_solvable(3, 7));
  HashConfig h;
  WorkDistribution<TilePuzzle> dist(p, h);
  EngineConfig config;
  config.workers = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    RandomSchedule schedule(1);
    benchmark::DoNotOptimize(hdastar_interleaved(p, dist, config, schedule).solution.cost);
  }
}
BENCHMARK(BM_HdaStarInterleaved)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SpaStar(benchmark::State& state) {
  TilePuzzle p(tile_random_solvable(3, 7));
  EngineConfig config;
  config.workers = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spastar(p, config).solution.cost);
}
BENCHMARK(BM_SpaStar)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_IaSweep(benchmark::State& state) {
  const CostModel model{CostModelKind::discrete, true};
  for (auto _ : state) benchmark::DoNotOptimize(ia_sweep(2.0, 1024, model).mean_ratio);
}
BENCHMARK(BM_IaSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
