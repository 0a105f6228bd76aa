#include "parsearch/domains/grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace parsearch {

GridMap::GridMap(int width, int height, int connectivity)
    : width_(width), height_(height), connectivity_(connectivity) {
  if (width <= 0 || height <= 0) throw ConfigError("grid dimensions must be positive");
  if (connectivity != 4 && connectivity != 8) throw ConfigError("grid connectivity must be 4 or 8");
  open_.assign(static_cast<std::size_t>(width) * height, 1);
}

std::string GridMap::to_text() const {
  std::string out = std::to_string(width_) + " " + std::to_string(height_) + " " + std::to_string(connectivity_) + "\n";
  for (int y = 0; y < height_; ++y) {
    for (int x = 0; x < width_; ++x) out += traversable({x, y}) ? '.' : '#';
    out += '\n';
  }
  return out;
}

GridMap grid_parse(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    begin = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header \"width height connectivity\"");

  std::istringstream header{std::string(lines[0])};
  int width = 0, height = 0, connectivity = 0;
  std::string extra;
  if (!(header >> width >> height >> connectivity) || (header >> extra))
    throw ParseError(1, "header must be \"width height connectivity\"");
  if (width <= 0 || height <= 0) throw ParseError(1, "dimensions must be positive");
  if (connectivity != 4 && connectivity != 8) throw ParseError(1, "connectivity must be 4 or 8");

  GridMap map(width, height, connectivity);
  for (int y = 0; y < height; ++y) {
    const std::size_t line_number = static_cast<std::size_t>(y) + 2;
    if (static_cast<std::size_t>(y) + 1 >= lines.size()) throw ParseError(line_number, "missing grid row");
    const std::string_view row = lines[y + 1];
    if (static_cast<int>(row.size()) != width)
      throw ParseError(line_number, "row has " + std::to_string(row.size()) + " cells, expected " + std::to_string(width));
    for (int x = 0; x < width; ++x) {
      if (row[x] == '#') {
        map.set_blocked({x, y}, true);
      } else if (row[x] != '.') {
        throw ParseError(line_number, std::string("illegal character '") + row[x] + "'");
      }
    }
  }
  if (lines.size() > static_cast<std::size_t>(height) + 1)
    throw ParseError(static_cast<std::size_t>(height) + 2, "more rows than the declared height");
  return map;
}

void grid_expand(const GridMap& map, Cell c, std::vector<Successor<Cell>>& out) {
  static constexpr int kStraight[4][2] = {{0, -1}, {-1, 0}, {1, 0}, {0, 1}};
  static constexpr int kDiagonal[4][2] = {{-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
  for (const auto& d : kStraight) {
    const Cell n{c.x + d[0], c.y + d[1]};
    if (map.traversable(n)) out.push_back({n, 1.0});
  }
  if (map.connectivity() == 8) {
    for (const auto& d : kDiagonal) {
      const Cell n{c.x + d[0], c.y + d[1]};
      if (map.traversable(n)) out.push_back({n, kSqrt2});
    }
  }
}

Cost octile_h(Cell a, Cell b, int connectivity) {
  const Cost dx = std::abs(a.x - b.x);
  const Cost dy = std::abs(a.y - b.y);
  if (connectivity == 4) return dx + dy;
  return kSqrt2 * std::min(dx, dy) + std::abs(dx - dy);
}

GridInstance grid_random(int width, int height, int connectivity, double density, std::uint64_t seed) {
  GridMap map(width, height, connectivity);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<Cell> open;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      if (coin(rng) < density) {
        map.set_blocked({x, y}, true);
      } else {
        open.push_back({x, y});
      }
    }
  if (open.empty()) {
    map.set_blocked({0, 0}, false);
    open.push_back({0, 0});
  }
  std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
  const Cell start = open[pick(rng)];
  const Cell goal = open[pick(rng)];
  return {std::move(map), start, goal};
}

GridProblem::GridProblem(std::shared_ptr<const GridMap> map, Cell start, Cell goal)
    : map_(std::move(map)), start_(start), goal_(goal) {
  if (!map_->in_bounds(start_)) throw ConfigError("start out of bounds");
  if (!map_->in_bounds(goal_)) throw ConfigError("goal out of bounds");
  if (!map_->traversable(start_)) throw ConfigError("start blocked");
  if (!map_->traversable(goal_)) throw ConfigError("goal blocked");
}

void GridProblem::append_canonical(Cell c, std::string& out) const {
  char bytes[8];
  std::memcpy(bytes, &c.x, 4);
  std::memcpy(bytes + 4, &c.y, 4);
  out.append(bytes, 8);
}

}  // namespace parsearch
