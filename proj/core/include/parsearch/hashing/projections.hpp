#pragma once

#include "parsearch/domains/explicit_graph.hpp"
#include "parsearch/domains/grid.hpp"
#include "parsearch/domains/lattice.hpp"
#include "parsearch/domains/tile.hpp"
#include "parsearch/hashing/hash_config.hpp"
#include "parsearch/hashing/zobrist.hpp"

namespace parsearch {

// Default Abstract Zobrist projections.
//   tiles:   (tile, position) -> (tile, block of tile_azh_rows board rows)
//   grids:   x -> x / grid_azh_block, y -> y / grid_azh_block
//   lattice: (axis, x_i) -> (axis, x_i / lattice_azh_block)
//   graphs:  identity
FeatureProjection azh_projection(const TilePuzzle& problem, const HashConfig& config);
FeatureProjection azh_projection(const GridProblem& problem, const HashConfig& config);
FeatureProjection azh_projection(const GraphProblem& problem, const HashConfig& config);
FeatureProjection azh_projection(const LatticeProblem& problem, const HashConfig& config);

// Abstractions for abstraction-based owners, expressed as projections that
// drop the ignored features.
//   tiles:   keep only the positions of abstraction_tiles (default 1, 2, 3)
//   grids:   (x / grid_block, y / grid_block)
//   lattice: coordinates divided by lattice_block
//   graphs:  node id / graph_block
FeatureProjection abstraction_projection(const TilePuzzle& problem, const HashConfig& config);
FeatureProjection abstraction_projection(const GridProblem& problem, const HashConfig& config);
FeatureProjection abstraction_projection(const GraphProblem& problem, const HashConfig& config);
FeatureProjection abstraction_projection(const LatticeProblem& problem, const HashConfig& config);

}  // namespace parsearch
