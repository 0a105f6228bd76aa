#include "parsearch/hashing/projections.hpp"

#include <algorithm>

namespace parsearch {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

FeatureProjection grid_blocks(const GridProblem& problem, int block) {
  const std::size_t w = problem.map().width();
  const std::size_t h = problem.map().height();
  const std::size_t bw = ceil_div(w, block);
  std::vector<FeatureId> map(w + h);
  for (std::size_t x = 0; x < w; ++x) map[x] = static_cast<FeatureId>(x / block);
  for (std::size_t y = 0; y < h; ++y) map[w + y] = static_cast<FeatureId>(bw + y / block);
  return FeatureProjection(std::move(map), bw + ceil_div(h, block));
}

FeatureProjection lattice_blocks(const LatticeProblem& problem, int block) {
  std::vector<FeatureId> map(problem.feature_count());
  std::size_t offset = 0;
  for (int axis = 0; axis < problem.dims(); ++axis) {
    const std::size_t values = static_cast<std::size_t>(problem.lengths()[axis]) + 1;
    for (std::size_t v = 0; v < values; ++v)
      map[problem.coordinate_feature(axis, static_cast<int>(v))] = static_cast<FeatureId>(offset + v / block);
    offset += ceil_div(values, block);
  }
  return FeatureProjection(std::move(map), offset);
}

}  // namespace

FeatureProjection azh_projection(const TilePuzzle& problem, const HashConfig& config) {
  const int w = problem.width();
  const int cells = w * w;
  const int blocks = static_cast<int>(ceil_div(w, config.tile_azh_rows));
  std::vector<FeatureId> map(problem.feature_count());
  for (int tile = 0; tile < cells; ++tile)
    for (int pos = 0; pos < cells; ++pos)
      map[tile_feature(cells, tile, pos)] = static_cast<FeatureId>(tile * blocks + (pos / w) / config.tile_azh_rows);
  return FeatureProjection(std::move(map), static_cast<std::size_t>(cells) * blocks);
}

FeatureProjection azh_projection(const GridProblem& problem, const HashConfig& config) {
  return grid_blocks(problem, config.grid_azh_block);
}

FeatureProjection azh_projection(const GraphProblem& problem, const HashConfig&) {
  return FeatureProjection::identity(problem.feature_count());
}

FeatureProjection azh_projection(const LatticeProblem& problem, const HashConfig& config) {
  return lattice_blocks(problem, config.lattice_azh_block);
}

FeatureProjection abstraction_projection(const TilePuzzle& problem, const HashConfig& config) {
  const int cells = problem.width() * problem.width();
  std::vector<FeatureId> map(problem.feature_count(), kDroppedFeature);
  const auto& kept = config.abstraction_tiles;
  for (std::size_t k = 0; k < kept.size(); ++k) {
    const int tile = kept[k];
    if (tile < 1 || tile >= cells) throw ConfigError("abstraction tile " + std::to_string(tile) + " is not on the board");
    if (std::count(kept.begin(), kept.end(), tile) > 1) throw ConfigError("abstraction tiles must be distinct");
    for (int pos = 0; pos < cells; ++pos)
      map[tile_feature(cells, tile, pos)] = static_cast<FeatureId>(k * cells + pos);
  }
  return FeatureProjection(std::move(map), kept.size() * cells);
}

FeatureProjection abstraction_projection(const GridProblem& problem, const HashConfig& config) {
  return grid_blocks(problem, config.grid_block);
}

FeatureProjection abstraction_projection(const GraphProblem& problem, const HashConfig& config) {
  const std::size_t n = problem.feature_count();
  std::vector<FeatureId> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<FeatureId>(i / config.graph_block);
  return FeatureProjection(std::move(map), ceil_div(n, config.graph_block));
}

FeatureProjection abstraction_projection(const LatticeProblem& problem, const HashConfig& config) {
  return lattice_blocks(problem, config.lattice_block);
}

}  // namespace parsearch
