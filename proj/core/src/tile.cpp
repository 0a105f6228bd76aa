#include "parsearch/domains/tile.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>

namespace parsearch {

namespace {

void check_width(int width) {
  if (width < 2 || width > kMaxTileWidth)
    throw ConfigError("tile width must be in [2, " + std::to_string(kMaxTileWidth) + "], got " +
                      std::to_string(width));
}

bool permutation_is_odd(const TileState& s) {
  const int n = s.size();
  std::array<bool, kMaxTileCells> seen{};
  int transpositions = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int length = 0;
    for (int j = i; !seen[j]; j = s.cells[j]) {
      seen[j] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return (transpositions & 1) != 0;
}

}  // namespace

TileState tile_goal(int width) {
  check_width(width);
  TileState s;
  s.width = static_cast<std::uint8_t>(width);
  for (int i = 0; i < width * width; ++i) s.cells[i] = static_cast<std::uint8_t>(i);
  s.blank = 0;
  return s;
}

TileState tile_from_permutation(int width, std::span<const int> permutation) {
  check_width(width);
  const int n = width * width;
  if (static_cast<int>(permutation.size()) != n)
    throw ConfigError("expected " + std::to_string(n) + " tiles, got " + std::to_string(permutation.size()));
  TileState s;
  s.width = static_cast<std::uint8_t>(width);
  std::array<bool, kMaxTileCells> seen{};
  for (int pos = 0; pos < n; ++pos) {
    const int tile = permutation[pos];
    if (tile < 0 || tile >= n || seen[tile]) throw ConfigError("tile values are not a permutation of 0..n*n-1");
    seen[tile] = true;
    s.cells[pos] = static_cast<std::uint8_t>(tile);
    if (tile == 0) s.blank = static_cast<std::uint8_t>(pos);
  }
  return s;
}

std::string tile_to_string(const TileState& s) {
  std::string out;
  for (int i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s.cells[i]);
  }
  return out;
}

void tile_expand(const TileState& s, std::vector<Successor<TileState>>& out) {
  const int w = s.width;
  const int row = s.blank / w;
  const int col = s.blank % w;
  auto push = [&](int target) {
    TileState next = s;
    next.cells[s.blank] = s.cells[target];
    next.cells[target] = 0;
    next.blank = static_cast<std::uint8_t>(target);
    out.push_back({next, 1.0});
  };
  if (row > 0) push(s.blank - w);
  if (col > 0) push(s.blank - 1);
  if (col + 1 < w) push(s.blank + 1);
  if (row + 1 < w) push(s.blank + w);
}

int manhattan(const TileState& s) {
  const int w = s.width;
  int total = 0;
  for (int pos = 0; pos < s.size(); ++pos) {
    const int tile = s.cells[pos];
    if (tile == 0) continue;
    total += std::abs(pos / w - tile / w) + std::abs(pos % w - tile % w);
  }
  return total;
}

bool tile_is_solvable(const TileState& s) {
  const int w = s.width;
  const int blank_distance = s.blank / w + s.blank % w;
  return permutation_is_odd(s) == ((blank_distance & 1) != 0);
}

TileState tile_random_solvable(int width, std::uint64_t seed) {
  TileState s = tile_goal(width);
  const int n = s.size();
  std::mt19937_64 rng(seed);
  for (int i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<int> pick(0, i);
    std::swap(s.cells[i], s.cells[pick(rng)]);
  }
  for (int pos = 0; pos < n; ++pos)
    if (s.cells[pos] == 0) s.blank = static_cast<std::uint8_t>(pos);
  if (!tile_is_solvable(s)) {
    // Swapping two non-blank tiles flips parity: a bijection onto the solvable half.
    int a = s.blank == 0 ? 1 : 0;
    int b = (s.blank == a + 1) ? a + 2 : a + 1;
    std::swap(s.cells[a], s.cells[b]);
  }
  return s;
}

TileState tile_random_walk(int width, int moves, std::uint64_t seed) {
  TileState s = tile_goal(width);
  std::mt19937_64 rng(seed);
  std::vector<Successor<TileState>> next;
  int previous_blank = -1;
  for (int i = 0; i < moves; ++i) {
    next.clear();
    tile_expand(s, next);
    std::erase_if(next, [&](const Successor<TileState>& n) { return n.state.blank == previous_blank; });
    std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
    previous_blank = s.blank;
    s = next[pick(rng)].state;
  }
  return s;
}

boost::multiprecision::cpp_int tile_state_count(int width) {
  if (width < 2) throw ConfigError("tile width must be at least 2");
  boost::multiprecision::cpp_int count = 1;
  for (int i = 2; i <= width * width; ++i) count *= i;
  return count / 2;
}

TilePuzzle::TilePuzzle(TileState initial) : initial_(initial), goal_(tile_goal(initial.width)) {
  const int w = initial_.width;
  const int n = initial_.size();
  distance_.resize(static_cast<std::size_t>(n) * n);
  for (int tile = 0; tile < n; ++tile)
    for (int pos = 0; pos < n; ++pos)
      distance_[tile * n + pos] =
          tile == 0 ? 0 : static_cast<std::uint8_t>(std::abs(pos / w - tile / w) + std::abs(pos % w - tile % w));
}

bool TilePuzzle::is_goal(const TileState& s) const { return s == goal_; }

Cost TilePuzzle::h(const TileState& s) const {
  const int n = s.size();
  int total = 0;
  for (int pos = 0; pos < n; ++pos) total += distance_[s.cells[pos] * n + pos];
  return total;
}

void TilePuzzle::features(const TileState& s, std::vector<FeatureId>& out) const {
  const int n = s.size();
  for (int pos = 0; pos < n; ++pos) out.push_back(tile_feature(n, s.cells[pos], pos));
}

void TilePuzzle::append_canonical(const TileState& s, std::string& out) const {
  out.append(reinterpret_cast<const char*>(s.cells.data()), static_cast<std::size_t>(s.size()));
}

}  // namespace parsearch
