#pragma once

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "parsearch/parallel/engine.hpp"
#include "parsearch/problem.hpp"
#include "parsearch/serial/astar.hpp"

namespace parsearch {

inline std::vector<Cost> default_dovetail_weights() { return {1.0, 1.5, 2.0, 3.0, kInfiniteCost}; }

/// Portfolio of weighted A* runs, one thread per weight, sharing nothing but
/// a cancel flag. The first run to return a solution wins and stops the rest.
/// Only a winning weight of 1 carries an optimality guarantee.
template <SearchProblem P>
ParallelResult<StateOf<P>> dovetail(const P& problem, const std::vector<Cost>& weights,
                                    std::size_t node_limit = kDefaultNodeLimit) {
  using State = StateOf<P>;
  if (weights.empty()) throw ConfigError("dovetailing needs at least one weight");
  for (Cost w : weights)
    if (!(w >= 1.0)) throw ConfigError("dovetailing weights must be >= 1");

  std::atomic<bool> cancel{false};
  std::mutex lock;
  std::optional<Solution<State>> winner;
  Cost winning_weight = 0.0;
  std::vector<WorkerStats> stats(weights.size());
  std::exception_ptr limit_error;

  auto work = [&](std::size_t i) {
    SearchOptions<State> options;
    options.node_limit = node_limit;
    options.cancel = &cancel;
    try {
      Solution<State> run = wastar(problem, weights[i], options);
      std::lock_guard guard(lock);
      stats[i].expanded = run.stats.expanded;
      stats[i].generated = run.stats.generated;
      stats[i].reopened = run.stats.reopened;
      stats[i].duplicates = run.stats.duplicates;
      if (run.solved() && !winner) {
        winner = std::move(run);
        winning_weight = weights[i];
        cancel.store(true);
      }
    } catch (const NodeLimitExceeded&) {
      std::lock_guard guard(lock);
      limit_error = std::current_exception();
    }
  };

  const auto started = std::chrono::steady_clock::now();
  {
    std::vector<std::jthread> threads;
    for (std::size_t i = 0; i < weights.size(); ++i) threads.emplace_back(work, i);
  }

  ParallelResult<State> result;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  result.workers = std::move(stats);
  if (winner) {
    result.solution = std::move(*winner);
    result.winning_weight = winning_weight;
  } else if (limit_error) {
    std::rethrow_exception(limit_error);
  }
  const WorkerStats totals = result.totals();
  result.solution.stats.expanded = totals.expanded;
  result.solution.stats.generated = totals.generated;
  result.solution.stats.reopened = totals.reopened;
  result.solution.stats.duplicates = totals.duplicates;
  result.solution.stats.wall_time = result.wall_time;
  return result;
}

}  // namespace parsearch
