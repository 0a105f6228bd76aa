#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

struct Cell {
  std::int32_t x = 0;
  std::int32_t y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

inline constexpr Cost kSqrt2 = 1.41421356237309504880;

class GridMap {
 public:
  GridMap(int width, int height, int connectivity);

  int width() const { return width_; }
  int height() const { return height_; }
  int connectivity() const { return connectivity_; }

  bool in_bounds(Cell c) const { return c.x >= 0 && c.y >= 0 && c.x < width_ && c.y < height_; }
  bool traversable(Cell c) const { return in_bounds(c) && open_[index(c)] != 0; }
  void set_blocked(Cell c, bool blocked) { open_[index(c)] = blocked ? 0 : 1; }

  std::string to_text() const;

 private:
  std::size_t index(Cell c) const { return static_cast<std::size_t>(c.y) * width_ + c.x; }

  int width_;
  int height_;
  int connectivity_;
  std::vector<std::uint8_t> open_;
};

/// First line "width height connectivity", then `height` rows of `width`
/// characters: '.' traversable, '#' blocked.
GridMap grid_parse(std::string_view text);

void grid_expand(const GridMap& map, Cell c, std::vector<Successor<Cell>>& out);

/// Octile distance on 8-connected maps, Manhattan distance on 4-connected ones.
Cost octile_h(Cell a, Cell b, int connectivity);

/// Random map with each cell blocked with probability `density`; start and
/// goal are drawn among traversable cells.
struct GridInstance {
  GridMap map;
  Cell start;
  Cell goal;
};
GridInstance grid_random(int width, int height, int connectivity, double density, std::uint64_t seed);

class GridProblem {
 public:
  using State = Cell;

  /// Throws ConfigError when start or goal is blocked or out of bounds.
  GridProblem(std::shared_ptr<const GridMap> map, Cell start, Cell goal);

  const GridMap& map() const { return *map_; }
  Cell initial() const { return start_; }
  Cell goal() const { return goal_; }

  bool is_goal(Cell c) const { return c == goal_; }
  void expand(Cell c, std::vector<Successor<Cell>>& out) const { grid_expand(*map_, c, out); }
  Cost h(Cell c) const { return octile_h(c, goal_, map_->connectivity()); }
  // x coordinate features first, then y.
  void features(Cell c, std::vector<FeatureId>& out) const {
    out.push_back(static_cast<FeatureId>(c.x));
    out.push_back(static_cast<FeatureId>(map_->width() + c.y));
  }
  std::size_t feature_count() const { return static_cast<std::size_t>(map_->width() + map_->height()); }
  void append_canonical(Cell c, std::string& out) const;

 private:
  std::shared_ptr<const GridMap> map_;
  Cell start_;
  Cell goal_;
};

}  // namespace parsearch

template <>
struct std::hash<parsearch::Cell> {
  std::size_t operator()(const parsearch::Cell& c) const noexcept {
    return static_cast<std::size_t>(
        parsearch::mix64((static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x)) << 32) |
                         static_cast<std::uint32_t>(c.y)));
  }
};
