#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_set>
#include <vector>

#include "parsearch/problem.hpp"
#include "parsearch/serial/solution.hpp"

namespace parsearch {

template <class State>
struct DfsIteration {
  bool found = false;
  bool stopped = false;
  Cost cost = kInfiniteCost;
  std::vector<State> path;
  // Smallest f above the bound seen while pruning; infinity if nothing was pruned.
  Cost min_pruned = kInfiniteCost;
  // Up to `keep_pruned` smallest distinct pruned f values, ascending.
  std::vector<Cost> lowest_pruned;
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
};

/// One cost-bounded depth-first iteration. Stops at the first goal with
/// f <= bound. States already on the current path are not revisited.
/// `should_stop` is polled every few hundred expansions.
template <SearchProblem P>
DfsIteration<StateOf<P>> bounded_dfs(const P& problem, Cost bound, std::size_t keep_pruned = 1,
                                     const std::function<bool()>& should_stop = {}) {
  using State = StateOf<P>;
  struct Frame {
    std::vector<Successor<State>> successors;
    std::size_t next = 0;
    Cost g = 0.0;
  };

  DfsIteration<State> out;
  std::vector<Frame> frames;
  std::size_t depth = 0;
  std::vector<State> path;
  std::unordered_set<State> on_path;

  auto note_pruned = [&](Cost f) {
    out.min_pruned = std::min(out.min_pruned, f);
    if (keep_pruned == 0) return;
    auto& low = out.lowest_pruned;
    auto it = std::lower_bound(low.begin(), low.end(), f - kCostEpsilon);
    if (it != low.end() && cost_equal(*it, f)) return;
    if (low.size() == keep_pruned && it == low.end()) return;
    low.insert(it, f);
    if (low.size() > keep_pruned) low.pop_back();
  };

  // Returns true when a frame was pushed.
  auto enter = [&](const State& s, Cost g) {
    const Cost f = g + problem.h(s);
    if (f > bound + kCostEpsilon) {
      note_pruned(f);
      return false;
    }
    ++out.expanded;
    if (problem.is_goal(s)) {
      out.found = true;
      out.cost = g;
      out.path = path;
      out.path.push_back(s);
      return false;
    }
    if (depth == frames.size()) frames.emplace_back();
    Frame& frame = frames[depth++];
    frame.successors.clear();
    frame.next = 0;
    frame.g = g;
    problem.expand(s, frame.successors);
    out.generated += frame.successors.size();
    path.push_back(s);
    on_path.insert(s);
    return true;
  };

  enter(problem.initial(), 0.0);
  while (depth > 0 && !out.found) {
    Frame& top = frames[depth - 1];
    if (top.next == top.successors.size()) {
      on_path.erase(path.back());
      path.pop_back();
      --depth;
      continue;
    }
    const Successor<State> next = top.successors[top.next++];
    if (on_path.contains(next.state)) continue;
    enter(next.state, top.g + next.cost);
    if (should_stop && (out.expanded & 255) == 0 && should_stop()) {
      out.stopped = true;
      break;
    }
  }
  return out;
}

/// Iterative deepening A*: bounds start at h(s0) and rise to the smallest
/// pruned f of the previous iteration.
template <SearchProblem P>
Solution<StateOf<P>> idastar(const P& problem, const SearchOptions<StateOf<P>>& options = {}) {
  const auto started = std::chrono::steady_clock::now();
  Solution<StateOf<P>> result;
  std::function<bool()> stop;
  if (options.cancel) stop = [c = options.cancel] { return c->load(std::memory_order_relaxed); };
  Cost bound = problem.h(problem.initial());
  while (true) {
    auto iteration = bounded_dfs(problem, bound, 0, stop);
    result.stats.expanded += iteration.expanded;
    result.stats.generated += iteration.generated;
    result.stats.iteration_expanded.push_back(iteration.expanded);
    if (iteration.found) {
      result.status = SearchStatus::solved;
      result.cost = iteration.cost;
      result.path = std::move(iteration.path);
      break;
    }
    if (iteration.stopped) {
      result.status = SearchStatus::cancelled;
      break;
    }
    if (iteration.min_pruned == kInfiniteCost) break;
    bound = iteration.min_pruned;
  }
  result.stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace parsearch
