#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "parsearch/hashing/distribution.hpp"
#include "parsearch/parallel/engine.hpp"
#include "parsearch/parallel/incumbent.hpp"
#include "parsearch/parallel/network.hpp"
#include "parsearch/parallel/schedule.hpp"
#include "parsearch/problem.hpp"
#include "parsearch/serial/node_table.hpp"
#include "parsearch/termination/termination.hpp"

namespace parsearch {

namespace detail {

template <SearchProblem P>
struct HdaShared {
  using State = StateOf<P>;

  const P& problem;
  const WorkDistribution<P>& distribution;
  EngineConfig config;
  Network<State>* network = nullptr;
  WorkerObserver<State> observer;
  // Threaded runs flush on a timer and pace detection rounds; the
  // interleaver has no clock.
  bool threaded = true;
  Incumbent<State> incumbent;
  std::atomic<bool> done{false};
  std::atomic<bool> node_limit_hit{false};
};

// One HDA* worker: a private node table, outgoing batches per destination and
// the termination counters. All methods run on the worker's own thread.
template <SearchProblem P>
class HdaWorker {
 public:
  using State = StateOf<P>;
  using Clock = std::chrono::steady_clock;

  HdaWorker(WorkerId id, HdaShared<P>& shared)
      : id_(id),
        shared_(shared),
        workers_(shared.config.workers),
        batch_size_(shared.config.effective_batch_size()),
        buffers_(workers_),
        rng_(shared.config.seed ^ mix64(id + 1)),
        detector_(shared.config.termination),
        last_flush_(Clock::now()),
        last_detection_(Clock::now() - shared.config.detection_interval) {}

  WorkerId id() const { return id_; }

  /// True if a message was sent since the last call.
  bool take_flushed() { return std::exchange(flushed_, false); }
  std::mt19937_64& rng() { return rng_; }

  void seed_root() { insert(shared_.problem.initial(), 0.0, nullptr); }

  /// Drains the mailbox, serves a control token, then expands at most one
  /// node. Returns false if nothing happened.
  bool step() {
    bool progress = false;
    packets_.clear();
    shared_.network->drain(id_, packets_);
    std::optional<ControlToken> token;
    for (auto& packet : packets_) {
      progress = true;
      if (auto* message = std::get_if<WorkMessage<State>>(&packet)) {
        counters_.on_receive(message->stamp);
        ++stats_.messages_received;
        for (const Triplet<State>& t : message->batch) {
          ++stats_.received;
          insert(t.state, t.g, t.has_parent ? &t.parent : nullptr);
        }
      } else {
        token = std::get<ControlToken>(packet);
      }
    }
    if (token) serve(*token);
    if (shared_.done.load(std::memory_order_relaxed)) return progress;

    if (expand_one()) {
      progress = true;
    } else if (flush_all()) {
      progress = true;
    }
    if (shared_.threaded && Clock::now() - last_flush_ >= shared_.config.flush_interval && flush_all())
      progress = true;
    if (may_initiate()) {
      last_detection_ = Clock::now();
      forward(detector_.initiate(counters_, true));
      progress = true;
    }
    return progress;
  }

  /// Mailbox contents aside, could step() do anything?
  bool has_local_work() {
    if (expandable()) return true;
    for (const auto& b : buffers_)
      if (!b.empty()) return true;
    return may_initiate();
  }

  /// Outgoing batches empty and no open node below the incumbent.
  bool quiescent() {
    for (const auto& b : buffers_)
      if (!b.empty()) return false;
    return !expandable();
  }

  NodeTable<State>& table() { return table_; }
  const std::vector<std::vector<Triplet<State>>>& buffers() const { return buffers_; }
  const TerminationCounters& counters() const { return counters_; }
  std::uint64_t detection_rounds() const { return detector_.rounds(); }

  WorkerStats stats() const {
    WorkerStats s = stats_;
    s.stored = table_.size();
    return s;
  }

 private:
  Cost prune_limit() const {
    const Cost best = shared_.incumbent.cost();
    return best == kInfiniteCost ? kInfiniteCost : best - kCostEpsilon;
  }

  bool expandable() { return table_.min_priority() < prune_limit(); }

  bool may_initiate() {
    if (id_ != 0 || detector_.in_progress() || !quiescent()) return false;
    return !shared_.threaded || Clock::now() - last_detection_ >= shared_.config.detection_interval;
  }

  void insert(const State& s, Cost g, const State* parent) {
    const auto& dist = shared_.distribution;
    if (shared_.config.check_ownership && workers_ > 1 && dist.deterministic() && dist.owner(s, workers_) != id_)
      ++stats_.ownership_violations;
    switch (table_.offer(s, g, parent, [&](const State& x) { return shared_.problem.h(x); })) {
      case NodeTable<State>::OfferResult::reopened: ++stats_.reopened; break;
      case NodeTable<State>::OfferResult::duplicate: ++stats_.duplicates; break;
      default: break;
    }
    if (table_.size() > shared_.config.node_limit) {
      shared_.node_limit_hit.store(true);
      shared_.done.store(true);
    }
  }

  bool expand_one() {
    auto index = table_.pop(prune_limit());
    if (!index) return false;
    const State state = table_.entry(*index).state;
    const Cost g = table_.entry(*index).g;
    ++stats_.expanded;
    if (shared_.observer) shared_.observer(id_, state, g, g + table_.entry(*index).h);
    if (shared_.problem.is_goal(state)) {
      shared_.incumbent.reduce(g, state);
      return true;
    }
    successors_.clear();
    shared_.problem.expand(state, successors_);
    for (const auto& next : successors_) {
      ++stats_.generated;
      const Cost g1 = g + next.cost;
      const WorkerId owner = workers_ == 1 ? 0 : shared_.distribution.owner(next.state, workers_, rng_);
      if (owner == id_) {
        insert(next.state, g1, &state);
        continue;
      }
      ++stats_.sent;
      buffers_[owner].push_back(Triplet<State>{next.state, g1, state, true});
      if (buffers_[owner].size() >= batch_size_) flush(owner);
    }
    return true;
  }

  void flush(WorkerId to) {
    WorkMessage<State> message;
    message.sender = id_;
    message.sequence = next_sequence_++;
    message.stamp = counters_.on_send();
    message.batch = std::move(buffers_[to]);
    buffers_[to].clear();
    ++stats_.messages_sent;
    flushed_ = true;
    shared_.network->send(id_, to, std::move(message));
  }

  bool flush_all() {
    bool any = false;
    for (WorkerId to = 0; to < workers_; ++to) {
      if (buffers_[to].empty()) continue;
      flush(to);
      any = true;
    }
    last_flush_ = Clock::now();
    return any;
  }

  void forward(const ControlToken& token) { shared_.network->send(id_, (id_ + 1) % workers_, token); }

  // Quiescence is sampled right after the mailbox drain, before this step
  // expands anything.
  void serve(ControlToken& token) {
    const bool q = quiescent();
    if (id_ != 0) {
      if (token.mode == TerminationMode::two_wave)
        two_wave_visit(counters_, q, token);
      else
        time_algorithm_step(counters_, q, token);
      forward(token);
      return;
    }
    switch (detector_.on_return(token, counters_, q)) {
      case TerminationDetector::Outcome::forward: forward(token); break;
      case TerminationDetector::Outcome::terminated: shared_.done.store(true); break;
      case TerminationDetector::Outcome::failed: last_detection_ = Clock::now(); break;
    }
  }

  WorkerId id_;
  HdaShared<P>& shared_;
  std::uint32_t workers_;
  std::size_t batch_size_;
  NodeTable<State> table_;
  std::vector<std::vector<Triplet<State>>> buffers_;
  std::vector<Packet<State>> packets_;
  std::vector<Successor<State>> successors_;
  std::mt19937_64 rng_;
  TerminationCounters counters_;
  TerminationDetector detector_;
  WorkerStats stats_;
  std::uint64_t next_sequence_ = 0;
  bool flushed_ = false;
  Clock::time_point last_flush_;
  Clock::time_point last_detection_;
};

template <SearchProblem P>
class HdaRun {
 public:
  using State = StateOf<P>;

  HdaRun(const P& problem, const WorkDistribution<P>& distribution, const EngineConfig& config,
         WorkerObserver<State> observer, Network<State>& network, bool threaded)
      : shared_{problem, distribution, config, &network, std::move(observer), threaded} {
    config.validate();
    for (WorkerId i = 0; i < config.workers; ++i) workers_.push_back(std::make_unique<HdaWorker<P>>(i, shared_));
    std::mt19937_64 root_rng(config.seed);
    const WorkerId root = config.workers == 1 ? 0 : distribution.owner(problem.initial(), config.workers, root_rng);
    workers_[root]->seed_root();
  }

  HdaShared<P>& shared() { return shared_; }
  HdaWorker<P>& worker(WorkerId i) { return *workers_[i]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(workers_.size()); }

  /// Collects statistics, audits the final state and rebuilds the path.
  /// `mailboxes_empty` is the caller's view of undelivered packets.
  ParallelResult<State> finish(bool mailboxes_empty, double wall_time, std::uint64_t unsafe_detections) {
    if (shared_.node_limit_hit.load()) throw NodeLimitExceeded(shared_.config.node_limit);
    ParallelResult<State> result;
    result.termination = shared_.config.termination;
    result.wall_time = wall_time;
    result.detection_rounds = workers_[0]->detection_rounds();
    result.audit.buffers_empty = mailboxes_empty;
    result.audit.unsafe_detections = unsafe_detections;
    const Cost best = shared_.incumbent.cost();
    std::uint64_t sent = 0, received = 0;
    for (auto& w : workers_) {
      result.workers.push_back(w->stats());
      sent += w->counters().sent;
      received += w->counters().received;
      for (const auto& b : w->buffers())
        if (!b.empty()) result.audit.buffers_empty = false;
      if (best != kInfiniteCost && w->table().min_priority() < best - kCostEpsilon)
        result.audit.open_above_incumbent = false;
    }
    result.audit.counters_balanced = sent == received;

    const WorkerStats totals = result.totals();
    Solution<State>& solution = result.solution;
    solution.stats.expanded = totals.expanded;
    solution.stats.generated = totals.generated;
    solution.stats.reopened = totals.reopened;
    solution.stats.duplicates = totals.duplicates;
    solution.stats.wall_time = wall_time;
    if (auto goal = shared_.incumbent.goal()) {
      solution.status = SearchStatus::solved;
      solution.cost = best;
      solution.path = rebuild_path(*goal, best);
    }
    return result;
  }

 private:
  // A state can sit in several tables when ownership is not a function
  // (random strategy), and with zero-cost edges the cheapest records of two
  // states may name each other as parents. The walk therefore searches back
  // from the goal, only following a record whose g fits the cost still
  // available, so any chain that reaches the root costs at most the incumbent.
  std::vector<State> rebuild_path(const State& goal, Cost best) {
    struct Frame {
      State state;
      Cost budget;
      std::vector<std::pair<State, Cost>> parents;  // (parent, budget left there)
      std::size_t next = 0;
    };
    const P& problem = shared_.problem;
    std::unordered_map<State, Cost> failed;  // largest budget known to fail
    std::unordered_set<State> on_path;
    std::vector<Successor<State>> successors;

    auto open_frame = [&](const State& s, Cost budget) -> std::optional<Frame> {
      Frame f{s, budget, {}, 0};
      std::vector<std::pair<Cost, State>> records;
      for (auto& w : workers_) {
        const auto* e = w->table().find(s);
        if (!e || e->g > budget + kCostEpsilon) continue;
        if (!e->has_parent) return std::nullopt;  // reached the root
        records.emplace_back(e->g, e->parent);
      }
      std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [g, parent] : records) {
        successors.clear();
        problem.expand(parent, successors);
        Cost edge = kInfiniteCost;
        for (const auto& n : successors)
          if (n.state == s) edge = std::min(edge, n.cost);
        if (edge != kInfiniteCost) f.parents.emplace_back(parent, budget - edge);
      }
      return f;
    };

    std::vector<Frame> stack;
    auto root = open_frame(goal, best);
    if (!root) return {goal};
    stack.push_back(std::move(*root));
    on_path.insert(goal);
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == top.parents.size()) {
        auto& worst = failed[top.state];
        worst = std::max(worst, top.budget);
        on_path.erase(top.state);
        stack.pop_back();
        continue;
      }
      const auto [parent, budget] = top.parents[top.next++];
      if (on_path.count(parent)) continue;
      if (auto it = failed.find(parent); it != failed.end() && budget <= it->second) continue;
      auto frame = open_frame(parent, budget);
      if (!frame) {
        std::vector<State> path{parent};
        for (auto it = stack.rbegin(); it != stack.rend(); ++it) path.push_back(it->state);
        return path;
      }
      on_path.insert(parent);
      stack.push_back(std::move(*frame));
    }
    throw std::logic_error("broken parent chain");
  }

  HdaShared<P> shared_;
  std::vector<std::unique_ptr<HdaWorker<P>>> workers_;
};

template <class State>
bool improving(const Packet<State>& packet, Cost best, const auto& problem) {
  const auto* message = std::get_if<WorkMessage<State>>(&packet);
  if (!message) return false;
  for (const auto& t : message->batch)
    if (best == kInfiniteCost || t.g + problem.h(t.state) < best - kCostEpsilon) return true;
  return false;
}

}  // namespace detail

/// Hash-distributed A*, one thread per worker.
template <SearchProblem P>
ParallelResult<StateOf<P>> hdastar(const P& problem, const WorkDistribution<P>& distribution,
                                   const EngineConfig& config, WorkerObserver<StateOf<P>> observer = {}) {
  using State = StateOf<P>;
  config.validate();
  ThreadedNetwork<State> network(config.workers);
  detail::HdaRun<P> run(problem, distribution, config, std::move(observer), network, true);
  auto& shared = run.shared();
  const auto started = std::chrono::steady_clock::now();
  {
    std::vector<std::jthread> threads;
    for (WorkerId i = 0; i < run.size(); ++i) {
      threads.emplace_back([&, i] {
        auto& worker = run.worker(i);
        while (!shared.done.load(std::memory_order_acquire)) {
          if (!worker.step()) {
            network.wait(i, std::chrono::microseconds(200));
          } else if (worker.take_flushed()) {
            // Let receivers run; on an oversubscribed machine a worker would
            // otherwise expand a whole time slice ahead of the others.
            std::this_thread::yield();
          }
        }
        network.wake_all();
      });
    }
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  bool empty = true;
  for (WorkerId i = 0; i < run.size(); ++i) {
    // Leftover control tokens are harmless; leftover work is not.
    std::vector<Packet<State>> rest;
    network.drain(i, rest);
    for (const auto& p : rest)
      if (std::holds_alternative<WorkMessage<State>>(p)) empty = false;
  }
  return run.finish(empty, wall, 0);
}

/// The same algorithm driven step by step on one thread. `policy` chooses
/// between running a worker and delivering an in-flight packet, so a fixed
/// policy yields a reproducible execution. Each detection is audited: it is
/// unsafe if an improving triplet is still undelivered or unflushed.
template <SearchProblem P>
ParallelResult<StateOf<P>> hdastar_interleaved(const P& problem, const WorkDistribution<P>& distribution,
                                               const EngineConfig& config, SchedulePolicy& policy,
                                               WorkerObserver<StateOf<P>> observer = {},
                                               std::uint64_t max_actions = 200'000'000) {
  using State = StateOf<P>;
  config.validate();
  InterleavedNetwork<State> network(config.workers);
  detail::HdaRun<P> run(problem, distribution, config, std::move(observer), network, false);
  auto& shared = run.shared();
  const std::uint32_t p = run.size();
  const auto started = std::chrono::steady_clock::now();

  std::uint64_t unsafe = 0;
  auto audit_detection = [&] {
    const Cost best = shared.incumbent.cost();
    for (WorkerId i = 0; i < p; ++i) {
      for (const auto& packet : network.inbox(i))
        if (detail::improving<State>(packet, best, problem)) return true;
      for (WorkerId j = 0; j < p; ++j)
        for (const auto& packet : network.in_flight(i, j))
          if (detail::improving<State>(packet, best, problem)) return true;
      for (const auto& buffer : run.worker(i).buffers())
        for (const auto& t : buffer)
          if (best == kInfiniteCost || t.g + problem.h(t.state) < best - kCostEpsilon) return true;
    }
    return false;
  };

  std::vector<ScheduleAction> enabled;
  std::uint64_t actions = 0;
  while (!shared.done.load()) {
    enabled.clear();
    for (WorkerId i = 0; i < p; ++i)
      if (!network.inbox(i).empty() || run.worker(i).has_local_work())
        enabled.push_back({ScheduleAction::Kind::step, i, 0, 0});
    for (WorkerId from = 0; from < p; ++from)
      for (WorkerId to = 0; to < p; ++to)
        if (!network.in_flight(from, to).empty())
          enabled.push_back({ScheduleAction::Kind::deliver, 0, from, to});
    if (enabled.empty()) throw std::logic_error("interleaver deadlock: no enabled action");
    if (++actions > max_actions) throw std::runtime_error("interleaver action limit exceeded");

    const ScheduleAction& action = enabled[policy.choose(enabled)];
    if (action.kind == ScheduleAction::Kind::deliver) {
      network.deliver(action.from, action.to);
      continue;
    }
    run.worker(action.worker).step();
    if (shared.done.load() && !shared.node_limit_hit.load() && audit_detection()) ++unsafe;
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  bool empty = true;
  for (WorkerId i = 0; i < p; ++i) {
    for (const auto& packet : network.inbox(i))
      if (std::holds_alternative<WorkMessage<State>>(packet)) empty = false;
    for (WorkerId j = 0; j < p; ++j)
      for (const auto& packet : network.in_flight(i, j))
        if (std::holds_alternative<WorkMessage<State>>(packet)) empty = false;
  }
  return run.finish(empty, wall, unsafe);
}

}  // namespace parsearch
