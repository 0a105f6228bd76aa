#include <benchmark/benchmark.h>

#include <array>
#include <random>
#include <vector>

#include "parsearch/hashing/distribution.hpp"

using namespace parsearch;

namespace {

std::vector<TileState> random_states(int width, std::size_t count) {
  std::vector<TileState> states;
  for (std::size_t i = 0; i < count; ++i) states.push_back(tile_random_solvable(width, i));
  return states;
}

}  // namespace

static void BM_ZobristFullKey(benchmark::State& state) {
  TilePuzzle p(tile_goal(4));
  ZobristTable table(p.feature_count(), 1);
  const auto states = random_states(4, 1024);
  std::vector<FeatureId> f;
  std::size_t i = 0;
  for (auto _ : state) {
    f.clear();
    p.features(states[i++ & 1023], f);
    benchmark::DoNotOptimize(zobrist_key(table, f));
  }
}
BENCHMARK(BM_ZobristFullKey);

// One tile move changes two features: XOR out two, XOR in two.
static void BM_ZobristIncrementalUpdate(benchmark::State& state) {
  ZobristTable table(256, 1);
  std::mt19937_64 rng(3);
  std::vector<std::array<FeatureId, 4>> moves(1024);
  for (auto& m : moves)
    for (auto& f : m) f = static_cast<FeatureId>(rng() % 256);
  std::uint64_t key = 0;
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& m = moves[i++ & 1023];
    key = zobrist_update(key, std::span<const FeatureId>(m.data(), 2), std::span<const FeatureId>(m.data() + 2, 2),
                         table);
    benchmark::DoNotOptimize(key);
  }
}
BENCHMARK(BM_ZobristIncrementalUpdate);

static void BM_Owner(benchmark::State& state) {
  TilePuzzle p(tile_goal(4));
  HashConfig config;
  config.kind = static_cast<HashKind>(state.range(0));
  WorkDistribution<TilePuzzle> dist(p, config);
  const auto states = random_states(4, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dist.owner(states[i++ & 1023], 16));
  state.SetLabel(std::string(hash_kind_name(config.kind)));
}
BENCHMARK(BM_Owner)
    ->Arg(static_cast<int>(HashKind::zobrist))
    ->Arg(static_cast<int>(HashKind::azh))
    ->Arg(static_cast<int>(HashKind::mult))
    ->Arg(static_cast<int>(HashKind::abstraction));
