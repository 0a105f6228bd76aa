#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "parsearch/common.hpp"

namespace parsearch {

inline constexpr int kMaxTileWidth = 5;
inline constexpr int kMaxTileCells = kMaxTileWidth * kMaxTileWidth;

// cells[pos] holds the tile at board position pos; 0 is the blank. The goal
// places the blank at position 0 and tile t at position t.
struct TileState {
  std::array<std::uint8_t, kMaxTileCells> cells{};
  std::uint8_t width = 0;
  std::uint8_t blank = 0;

  int size() const { return width * width; }

  friend bool operator==(const TileState&, const TileState&) = default;
};

TileState tile_goal(int width);

/// Builds a state from a row-major permutation; throws ConfigError if the
/// values are not a permutation of 0..n*n-1.
TileState tile_from_permutation(int width, std::span<const int> permutation);

std::string tile_to_string(const TileState& s);

void tile_expand(const TileState& s, std::vector<Successor<TileState>>& out);

int manhattan(const TileState& s);

bool tile_is_solvable(const TileState& s);

/// Uniform over the half of the permutations reachable from the goal.
TileState tile_random_solvable(int width, std::uint64_t seed);

/// Applies `moves` random blank moves to the goal, never undoing the previous
/// move. Cheap way to get instances of bounded difficulty.
TileState tile_random_walk(int width, int moves, std::uint64_t seed);

/// (n*n)!/2, the size of each of the two permutation-parity classes.
boost::multiprecision::cpp_int tile_state_count(int width);

/// Feature id of "tile t sits at position pos" on an n*n board.
inline FeatureId tile_feature(int cells, int tile, int pos) {
  return static_cast<FeatureId>(tile * cells + pos);
}

class TilePuzzle {
 public:
  using State = TileState;

  explicit TilePuzzle(TileState initial);

  const TileState& initial() const { return initial_; }
  int width() const { return initial_.width; }

  bool is_goal(const TileState& s) const;
  void expand(const TileState& s, std::vector<Successor<TileState>>& out) const { tile_expand(s, out); }
  Cost h(const TileState& s) const;
  void features(const TileState& s, std::vector<FeatureId>& out) const;
  std::size_t feature_count() const {
    const std::size_t cells = initial_.size();
    return cells * cells;
  }
  void append_canonical(const TileState& s, std::string& out) const;

 private:
  TileState initial_;
  TileState goal_;
  // distance_[tile * cells + pos]
  std::vector<std::uint8_t> distance_;
};

}  // namespace parsearch

template <>
struct std::hash<parsearch::TileState> {
  std::size_t operator()(const parsearch::TileState& s) const noexcept {
    return parsearch::hash_bytes(s.cells.data(), static_cast<std::size_t>(s.size()));
  }
};
