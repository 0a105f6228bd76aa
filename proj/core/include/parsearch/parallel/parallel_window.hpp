#pragma once

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "parsearch/parallel/engine.hpp"
#include "parsearch/problem.hpp"
#include "parsearch/serial/idastar.hpp"

namespace parsearch {

// Hands out IDA* bounds to parallel-window workers and decides when the best
// solution found so far is provably optimal.
//
// A failed iteration with bound B shows that no solution costs less than its
// smallest pruned f, so the lower bound LB is the largest such value over all
// failed iterations. The search is over once best <= LB. LB itself is issued
// whenever nobody holds it, which makes a single worker follow the serial
// IDA* bound sequence exactly; spare workers speculate on larger pruned f
// values reported by finished iterations.
class BoundDispenser {
 public:
  explicit BoundDispenser(Cost initial_bound) : lower_bound_(initial_bound) {}

  /// Claims the next bound, or nullopt if the caller should wait for a
  /// running iteration to report.
  std::optional<Cost> next();

  /// Result of an iteration claimed with next(). `abandoned` iterations were
  /// stopped early and prove nothing.
  void report(Cost bound, bool found, Cost solution_cost, bool abandoned, Cost min_pruned,
              const std::vector<Cost>& lowest_pruned);

  bool done() const { return best_ <= lower_bound_ + kCostEpsilon; }
  Cost best() const { return best_; }
  Cost lower_bound() const { return lower_bound_; }
  std::size_t running() const { return running_.size(); }
  /// Solutions that improved the best cost, including non-optimal ones.
  std::uint64_t provisional_solutions() const { return provisional_; }

 private:
  bool claimed(Cost bound) const;

  Cost lower_bound_;
  Cost best_ = kInfiniteCost;
  std::vector<Cost> claimed_;
  std::vector<Cost> running_;
  std::vector<Cost> candidates_;
  std::uint64_t provisional_ = 0;
};

template <class State>
struct WindowResult {
  ParallelResult<State> run;
  std::uint64_t provisional_solutions = 0;
  std::uint64_t iterations = 0;
};

/// Parallel window search: every worker runs a whole IDA* iteration with its
/// own bound. Each iteration reports its `workers` smallest pruned f values
/// as speculative bounds.
template <SearchProblem P>
WindowResult<StateOf<P>> parallel_window(const P& problem, const EngineConfig& config) {
  using State = StateOf<P>;
  config.validate();
  std::mutex lock;
  std::condition_variable changed;
  BoundDispenser dispenser(problem.h(problem.initial()));
  std::atomic<Cost> best{kInfiniteCost};
  std::vector<State> best_path;
  std::vector<WorkerStats> stats(config.workers);
  std::vector<std::uint64_t> iteration_expanded;
  bool stuck = false;

  auto work = [&](WorkerId id) {
    std::unique_lock guard(lock);
    while (true) {
      if (dispenser.done() || stuck) return;
      auto bound = dispenser.next();
      if (!bound) {
        if (dispenser.running() == 0) {
          stuck = true;
          changed.notify_all();
          return;
        }
        changed.wait(guard);
        continue;
      }
      guard.unlock();
      const Cost b = *bound;
      auto should_stop = [&] { return b >= best.load(std::memory_order_relaxed) - kCostEpsilon; };
      auto iteration = bounded_dfs(problem, b, config.workers, should_stop);
      guard.lock();
      stats[id].expanded += iteration.expanded;
      stats[id].generated += iteration.generated;
      iteration_expanded.push_back(iteration.expanded);
      const Cost before = dispenser.best();
      dispenser.report(b, iteration.found, iteration.cost, iteration.stopped, iteration.min_pruned,
                       iteration.lowest_pruned);
      if (dispenser.best() < before) {
        best.store(dispenser.best());
        best_path = std::move(iteration.path);
      }
      changed.notify_all();
    }
  };

  const auto started = std::chrono::steady_clock::now();
  {
    std::vector<std::jthread> threads;
    for (WorkerId i = 0; i < config.workers; ++i) threads.emplace_back(work, i);
  }
  if (stuck) throw std::logic_error("parallel window: no bound to issue");

  WindowResult<State> out;
  ParallelResult<State>& result = out.run;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  result.workers = std::move(stats);
  const WorkerStats totals = result.totals();
  result.solution.stats.expanded = totals.expanded;
  result.solution.stats.generated = totals.generated;
  result.solution.stats.wall_time = result.wall_time;
  result.solution.stats.iteration_expanded = std::move(iteration_expanded);
  if (dispenser.best() != kInfiniteCost) {
    result.solution.status = SearchStatus::solved;
    result.solution.cost = dispenser.best();
    result.solution.path = std::move(best_path);
  }
  out.provisional_solutions = dispenser.provisional_solutions();
  out.iterations = result.solution.stats.iteration_expanded.size();
  return out;
}

}  // namespace parsearch
