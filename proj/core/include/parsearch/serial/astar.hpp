#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "parsearch/problem.hpp"
#include "parsearch/serial/node_table.hpp"
#include "parsearch/serial/solution.hpp"

namespace parsearch {

/// Walks parent links from `index` back to the root of `table`.
template <class State>
std::vector<State> reconstruct_path(const NodeTable<State>& table, std::uint32_t index) {
  std::vector<State> path;
  const auto* e = &table.entry(index);
  path.push_back(e->state);
  while (e->has_parent) {
    e = table.find(e->parent);
    if (e == nullptr || path.size() > table.size()) throw std::logic_error("broken parent chain");
    path.push_back(e->state);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

namespace detail {

template <SearchProblem P, class HeuristicFn>
Solution<StateOf<P>> best_first(const P& problem, Cost weight, HeuristicFn&& heuristic,
                                const SearchOptions<StateOf<P>>& options) {
  using State = StateOf<P>;
  const auto started = std::chrono::steady_clock::now();
  Solution<State> result;
  SearchStats& stats = result.stats;
  auto finish = [&](SearchStatus status) {
    result.status = status;
    stats.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return std::move(result);
  };

  NodeTable<State> table(weight);
  table.offer(problem.initial(), 0.0, nullptr, heuristic);
  std::vector<Successor<State>> successors;
  while (auto index = table.pop()) {
    if (options.cancel && options.cancel->load(std::memory_order_relaxed)) return finish(SearchStatus::cancelled);
    const State state = table.entry(*index).state;
    const Cost g = table.entry(*index).g;
    ++stats.expanded;
    if (options.observer) options.observer(state, g, g + table.entry(*index).h);
    if (problem.is_goal(state)) {
      result.cost = g;
      result.path = reconstruct_path(table, *index);
      return finish(SearchStatus::solved);
    }
    successors.clear();
    problem.expand(state, successors);
    for (const auto& next : successors) {
      ++stats.generated;
      switch (table.offer(next.state, g + next.cost, &state, heuristic)) {
        case NodeTable<State>::OfferResult::reopened: ++stats.reopened; break;
        case NodeTable<State>::OfferResult::duplicate: ++stats.duplicates; break;
        default: break;
      }
    }
    if (table.size() > options.node_limit) throw NodeLimitExceeded(options.node_limit);
    stats.max_open = std::max<std::uint64_t>(stats.max_open, table.open_count());
  }
  return finish(SearchStatus::unsolvable);
}

}  // namespace detail

/// A* with full reopening; optimal for admissible h.
template <SearchProblem P>
Solution<StateOf<P>> astar(const P& problem, const SearchOptions<StateOf<P>>& options = {}) {
  return detail::best_first(problem, 1.0, [&](const StateOf<P>& s) { return problem.h(s); }, options);
}

/// Priority g + w*h, or h alone for w = infinity (greedy best-first).
template <SearchProblem P>
Solution<StateOf<P>> wastar(const P& problem, Cost weight, const SearchOptions<StateOf<P>>& options = {}) {
  if (!(weight >= 1.0)) throw ConfigError("weighted A* needs w >= 1");
  return detail::best_first(problem, weight, [&](const StateOf<P>& s) { return problem.h(s); }, options);
}

/// A* with h forced to zero.
template <SearchProblem P>
Solution<StateOf<P>> uniform_cost_oracle(const P& problem, const SearchOptions<StateOf<P>>& options = {}) {
  return detail::best_first(problem, 1.0, [](const StateOf<P>&) { return 0.0; }, options);
}

}  // namespace parsearch
