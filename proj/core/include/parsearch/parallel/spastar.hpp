#pragma once

#include <chrono>
#include <condition_variable>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "parsearch/parallel/engine.hpp"
#include "parsearch/parallel/incumbent.hpp"
#include "parsearch/problem.hpp"
#include "parsearch/serial/astar.hpp"
#include "parsearch/serial/node_table.hpp"

namespace parsearch {

/// Simple parallel A*: all workers share one OPEN/CLOSED behind a single lock
/// and expand outside it. A goal only lowers the incumbent; the search ends
/// when no open node beats the incumbent and no worker is mid-expansion.
template <SearchProblem P>
ParallelResult<StateOf<P>> spastar(const P& problem, const EngineConfig& config,
                                   WorkerObserver<StateOf<P>> observer = {}) {
  using State = StateOf<P>;
  config.validate();
  auto heuristic = [&](const State& s) { return problem.h(s); };

  std::mutex lock;
  std::condition_variable changed;
  NodeTable<State> table;
  Incumbent<State> incumbent;
  std::uint32_t busy = 0;
  bool finished = false;
  bool limit_hit = false;
  std::vector<WorkerStats> stats(config.workers);
  table.offer(problem.initial(), 0.0, nullptr, heuristic);

  auto work = [&](WorkerId id) {
    WorkerStats& mine = stats[id];
    std::vector<Successor<State>> successors;
    std::unique_lock guard(lock);
    while (true) {
      if (finished) return;
      const Cost best = incumbent.cost();
      auto index = table.pop(best == kInfiniteCost ? kInfiniteCost : best - kCostEpsilon);
      if (!index) {
        if (busy == 0) {
          finished = true;
          changed.notify_all();
          return;
        }
        changed.wait(guard);
        continue;
      }
      const State state = table.entry(*index).state;
      const Cost g = table.entry(*index).g;
      const Cost f = g + table.entry(*index).h;
      ++busy;
      guard.unlock();

      ++mine.expanded;
      if (observer) observer(id, state, g, f);
      const bool goal = problem.is_goal(state);
      successors.clear();
      if (goal)
        incumbent.reduce(g, state);
      else
        problem.expand(state, successors);

      guard.lock();
      for (const auto& next : successors) {
        ++mine.generated;
        switch (table.offer(next.state, g + next.cost, &state, heuristic)) {
          case NodeTable<State>::OfferResult::reopened: ++mine.reopened; break;
          case NodeTable<State>::OfferResult::duplicate: ++mine.duplicates; break;
          default: break;
        }
      }
      if (table.size() > config.node_limit) {
        limit_hit = true;
        finished = true;
      }
      --busy;
      changed.notify_all();
    }
  };

  const auto started = std::chrono::steady_clock::now();
  {
    std::vector<std::jthread> threads;
    for (WorkerId i = 0; i < config.workers; ++i) threads.emplace_back(work, i);
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  if (limit_hit) throw NodeLimitExceeded(config.node_limit);

  ParallelResult<State> result;
  result.workers = std::move(stats);
  result.wall_time = wall;
  const WorkerStats totals = result.totals();
  Solution<State>& solution = result.solution;
  solution.stats.expanded = totals.expanded;
  solution.stats.generated = totals.generated;
  solution.stats.reopened = totals.reopened;
  solution.stats.duplicates = totals.duplicates;
  solution.stats.wall_time = wall;
  result.workers[0].stored = table.size();
  if (auto goal = incumbent.goal()) {
    solution.status = SearchStatus::solved;
    solution.cost = incumbent.cost();
    solution.path = reconstruct_path(table, *table.index_of(*goal));
  }
  return result;
}

/// Deterministic SPA* schedule on one thread: in every round each of the p
/// workers takes one node off the shared OPEN, then all of them expand and
/// insert their successors in worker order. Models p workers in lock step.
template <SearchProblem P>
ParallelResult<StateOf<P>> spastar_lockstep(const P& problem, const EngineConfig& config,
                                            WorkerObserver<StateOf<P>> observer = {}) {
  using State = StateOf<P>;
  config.validate();
  auto heuristic = [&](const State& s) { return problem.h(s); };
  const auto started = std::chrono::steady_clock::now();
  NodeTable<State> table;
  Cost best = kInfiniteCost;
  std::optional<State> goal;
  std::vector<WorkerStats> stats(config.workers);
  table.offer(problem.initial(), 0.0, nullptr, heuristic);

  struct Taken {
    State state;
    Cost g;
    std::vector<Successor<State>> successors;
  };
  std::vector<Taken> round;
  while (true) {
    round.clear();
    for (WorkerId i = 0; i < config.workers; ++i) {
      auto index = table.pop(best == kInfiniteCost ? kInfiniteCost : best - kCostEpsilon);
      if (!index) break;
      const auto& e = table.entry(*index);
      ++stats[i].expanded;
      if (observer) observer(i, e.state, e.g, e.g + e.h);
      round.push_back({e.state, e.g, {}});
    }
    if (round.empty()) break;
    for (Taken& t : round) {
      if (problem.is_goal(t.state)) {
        if (t.g < best) {
          best = t.g;
          goal = t.state;
        }
      } else {
        problem.expand(t.state, t.successors);
      }
    }
    for (std::size_t i = 0; i < round.size(); ++i) {
      for (const auto& next : round[i].successors) {
        ++stats[i].generated;
        switch (table.offer(next.state, round[i].g + next.cost, &round[i].state, heuristic)) {
          case NodeTable<State>::OfferResult::reopened: ++stats[i].reopened; break;
          case NodeTable<State>::OfferResult::duplicate: ++stats[i].duplicates; break;
          default: break;
        }
      }
    }
    if (table.size() > config.node_limit) throw NodeLimitExceeded(config.node_limit);
  }

  ParallelResult<State> result;
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  result.workers = std::move(stats);
  const WorkerStats totals = result.totals();
  Solution<State>& solution = result.solution;
  solution.stats.expanded = totals.expanded;
  solution.stats.generated = totals.generated;
  solution.stats.reopened = totals.reopened;
  solution.stats.duplicates = totals.duplicates;
  solution.stats.wall_time = result.wall_time;
  result.workers[0].stored = table.size();
  if (goal) {
    solution.status = SearchStatus::solved;
    solution.cost = best;
    solution.path = reconstruct_path(table, *table.index_of(*goal));
  }
  return result;
}

}  // namespace parsearch
