#pragma once

// Reference implementations used to derive expected values in tests. They
// deliberately share no search code with the library.

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <queue>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "parsearch/common.hpp"
#include "parsearch/domains/explicit_graph.hpp"
#include "parsearch/domains/grid.hpp"
#include "parsearch/domains/lattice.hpp"
#include "parsearch/domains/tile.hpp"
#include "parsearch/problem.hpp"

namespace oracle {

using parsearch::Cost;

// Exhaustive breadth-first distances from the 3x3 goal. The puzzle is
// undirected, so this is also the distance to the goal.
class EightPuzzleBfs {
 public:
  EightPuzzleBfs() {
    std::array<int, 9> goal{};
    for (int i = 0; i < 9; ++i) goal[i] = i;
    std::deque<std::array<int, 9>> queue{goal};
    distance_[encode(goal)] = 0;
    while (!queue.empty()) {
      auto board = queue.front();
      queue.pop_front();
      const int d = distance_[encode(board)];
      int blank = 0;
      while (board[blank] != 0) ++blank;
      const int r = blank / 3, c = blank % 3;
      const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
      for (int k = 0; k < 4; ++k) {
        const int nr = r + dr[k], nc = c + dc[k];
        if (nr < 0 || nr > 2 || nc < 0 || nc > 2) continue;
        auto next = board;
        std::swap(next[blank], next[nr * 3 + nc]);
        if (distance_.try_emplace(encode(next), d + 1).second) queue.push_back(next);
      }
    }
  }

  static const EightPuzzleBfs& instance() {
    static const EightPuzzleBfs bfs;
    return bfs;
  }

  std::size_t reachable() const { return distance_.size(); }

  /// -1 when the state is not reachable from the goal.
  int distance(const parsearch::TileState& s) const {
    std::array<int, 9> board{};
    for (int i = 0; i < 9; ++i) board[i] = s.cells[i];
    auto it = distance_.find(encode(board));
    return it == distance_.end() ? -1 : it->second;
  }

 private:
  static std::uint32_t encode(const std::array<int, 9>& board) {
    std::uint32_t code = 0;
    for (int v : board) code = code * 9 + static_cast<std::uint32_t>(v);
    return code;
  }

  std::unordered_map<std::uint32_t, int> distance_;
};

/// Plain Dijkstra with lazy deletion; infinity when no goal is reachable.
template <parsearch::SearchProblem P>
Cost dijkstra(const P& problem) {
  using State = parsearch::StateOf<P>;
  using Item = std::pair<Cost, State>;
  auto later = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  std::unordered_map<State, Cost> best;
  best[problem.initial()] = 0.0;
  queue.push({0.0, problem.initial()});
  std::vector<parsearch::Successor<State>> successors;
  while (!queue.empty()) {
    auto [g, s] = queue.top();
    queue.pop();
    if (g > best[s]) continue;
    if (problem.is_goal(s)) return g;
    successors.clear();
    problem.expand(s, successors);
    for (const auto& n : successors) {
      const Cost g1 = g + n.cost;
      auto it = best.find(n.state);
      if (it == best.end() || g1 < it->second) {
        best[n.state] = g1;
        queue.push({g1, n.state});
      }
    }
  }
  return parsearch::kInfiniteCost;
}

/// Exact distance from every grid cell to `goal` (reverse Dijkstra; grid moves
/// are symmetric).
inline std::vector<Cost> grid_distances_to(const parsearch::GridMap& map, parsearch::Cell goal) {
  const int w = map.width(), h = map.height();
  std::vector<Cost> dist(static_cast<std::size_t>(w) * h, parsearch::kInfiniteCost);
  using Item = std::pair<Cost, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[goal.y * w + goal.x] = 0.0;
  queue.push({0.0, goal.y * w + goal.x});
  while (!queue.empty()) {
    auto [d, idx] = queue.top();
    queue.pop();
    if (d > dist[idx]) continue;
    const int x = idx % w, y = idx / w;
    for (int dy = -1; dy <= 1; ++dy) {
      for (int dx = -1; dx <= 1; ++dx) {
        if (dx == 0 && dy == 0) continue;
        const bool diagonal = dx != 0 && dy != 0;
        if (diagonal && map.connectivity() == 4) continue;
        const parsearch::Cell n{x + dx, y + dy};
        if (!map.traversable(n)) continue;
        const Cost nd = d + (diagonal ? std::sqrt(2.0) : 1.0);
        if (nd < dist[n.y * w + n.x]) {
          dist[n.y * w + n.x] = nd;
          queue.push({nd, n.y * w + n.x});
        }
      }
    }
  }
  return dist;
}

// The out-of-order expansion example: a->b 1, a->c 1, b->d 1, c->d 3, d goal.
inline std::shared_ptr<parsearch::ExplicitGraph> missorder_graph() {
  return std::make_shared<parsearch::ExplicitGraph>(parsearch::graph_parse(
      "start a\n"
      "goal d\n"
      "a b 1\n"
      "a c 1\n"
      "b d 1\n"
      "c d 3\n"));
}

/// Random digraph on `nodes` nodes with integer-or-half edge costs. When
/// `heuristic` is set, h is an admissible but generally inconsistent fraction
/// of the exact distance to the nearest goal.
inline std::shared_ptr<parsearch::ExplicitGraph> random_graph(int nodes, int edges, std::uint64_t seed,
                                                              bool heuristic) {
  std::mt19937_64 rng(seed);
  auto g = std::make_shared<parsearch::ExplicitGraph>();
  std::vector<parsearch::NodeId> ids;
  for (int i = 0; i < nodes; ++i) ids.push_back(g->add_node("n" + std::to_string(i)));
  std::uniform_int_distribution<int> pick(0, nodes - 1);
  std::uniform_int_distribution<int> half_units(0, 12);
  for (int e = 0; e < edges; ++e) g->add_edge(ids[pick(rng)], ids[pick(rng)], half_units(rng) * 0.5);
  g->set_start(ids[0]);
  g->add_goal(ids[nodes - 1]);
  if (nodes > 4) g->add_goal(ids[nodes - 2]);
  if (!heuristic) return g;

  // Reverse Dijkstra from the goal set.
  std::vector<std::vector<std::pair<int, Cost>>> reverse(nodes);
  for (int u = 0; u < nodes; ++u)
    for (const auto& e : g->edges(ids[u])) reverse[e.to.value].push_back({u, e.cost});
  std::vector<Cost> dist(nodes, parsearch::kInfiniteCost);
  using Item = std::pair<Cost, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (int v = 0; v < nodes; ++v)
    if (g->is_goal(ids[v])) {
      dist[v] = 0.0;
      queue.push({0.0, v});
    }
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (d > dist[v]) continue;
    for (auto [u, c] : reverse[v])
      if (d + c < dist[u]) {
        dist[u] = d + c;
        queue.push({dist[u], u});
      }
  }
  std::uniform_real_distribution<double> fraction(0.0, 1.0);
  for (int v = 0; v < nodes; ++v)
    if (dist[v] != parsearch::kInfiniteCost) g->set_h(ids[v], dist[v] * fraction(rng));
  return g;
}

/// Every point of the lattice box, in lexicographic order.
inline std::vector<parsearch::LatticePoint> lattice_points(const parsearch::LatticeProblem& problem) {
  std::vector<parsearch::LatticePoint> points;
  parsearch::LatticePoint p = problem.initial();
  const auto lengths = problem.lengths();
  while (true) {
    points.push_back(p);
    int axis = problem.dims() - 1;
    while (axis >= 0 && p.x[axis] == lengths[axis]) p.x[axis--] = 0;
    if (axis < 0) return points;
    ++p.x[axis];
  }
}

}  // namespace oracle
