#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "parsearch/common.hpp"
#include "parsearch/problem.hpp"

namespace parsearch {

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  std::uint64_t reopened = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t max_open = 0;
  double wall_time = 0.0;
  // Expansions per iteration (IDA* and parallel window only).
  std::vector<std::uint64_t> iteration_expanded;
};

enum class SearchStatus { solved, unsolvable, cancelled };

template <class State>
struct Solution {
  SearchStatus status = SearchStatus::unsolvable;
  Cost cost = kInfiniteCost;
  std::vector<State> path;
  SearchStats stats;

  bool solved() const { return status == SearchStatus::solved; }
};

inline constexpr std::size_t kDefaultNodeLimit = 10'000'000;

template <class State>
using ExpansionObserver = std::function<void(const State& state, Cost g, Cost f)>;

template <class State>
struct SearchOptions {
  std::size_t node_limit = kDefaultNodeLimit;
  const std::atomic<bool>* cancel = nullptr;
  ExpansionObserver<State> observer;
};

/// Re-derives the cost of `path` edge by edge. Returns nullopt if the path is
/// empty, does not start at the initial state, does not end in a goal, or uses
/// a transition expand() does not produce. Parallel edges use the cheapest.
template <SearchProblem P>
std::optional<Cost> validate_path(const P& problem, const std::vector<StateOf<P>>& path) {
  if (path.empty() || !(path.front() == problem.initial()) || !problem.is_goal(path.back())) return std::nullopt;
  Cost total = 0.0;
  std::vector<Successor<StateOf<P>>> successors;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    successors.clear();
    problem.expand(path[i], successors);
    Cost best = kInfiniteCost;
    for (const auto& s : successors)
      if (s.state == path[i + 1]) best = std::min(best, s.cost);
    if (best == kInfiniteCost) return std::nullopt;
    total += best;
  }
  return total;
}

}  // namespace parsearch
