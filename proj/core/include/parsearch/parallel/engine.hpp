#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "parsearch/common.hpp"
#include "parsearch/serial/solution.hpp"
#include "parsearch/termination/termination.hpp"

namespace parsearch {

struct EngineConfig {
  std::uint32_t workers = 1;
  // 0 selects the default: 10 triplets per message below 16 workers, 100 otherwise.
  std::uint32_t batch_size = 0;
  std::uint64_t seed = 42;
  // Per-worker limit on stored nodes.
  std::size_t node_limit = kDefaultNodeLimit;
  TerminationMode termination = TerminationMode::two_wave;
  std::chrono::microseconds flush_interval{1000};
  std::chrono::microseconds detection_interval{500};
  // Check on every insertion that the inserting worker owns the state.
  bool check_ownership = true;

  std::uint32_t effective_batch_size() const {
    if (batch_size > 0) return batch_size;
    return workers < 16 ? 10 : 100;
  }

  void validate() const {
    if (workers < 1) throw ConfigError("worker count must be at least 1");
  }
};

struct WorkerStats {
  std::uint64_t expanded = 0;
  std::uint64_t generated = 0;
  // Triplets routed to another worker / received from other workers.
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t messages_sent = 0;
  std::uint64_t messages_received = 0;
  std::uint64_t reopened = 0;
  std::uint64_t duplicates = 0;
  std::uint64_t stored = 0;
  std::uint64_t ownership_violations = 0;
};

// Post-termination consistency check of a decentralized run.
struct TerminationAudit {
  bool counters_balanced = true;     // triplets sent == triplets received
  bool buffers_empty = true;         // nothing left in outgoing batches or mailboxes
  bool open_above_incumbent = true;  // every open f >= incumbent - eps
  // Interleaver only: detections that fired while an improving triplet was undelivered.
  std::uint64_t unsafe_detections = 0;

  bool ok() const { return counters_balanced && buffers_empty && open_above_incumbent && unsafe_detections == 0; }
};

template <class State>
struct ParallelResult {
  Solution<State> solution;
  std::vector<WorkerStats> workers;
  TerminationMode termination = TerminationMode::two_wave;
  std::uint64_t detection_rounds = 0;
  TerminationAudit audit;
  double wall_time = 0.0;
  // Portfolio only: weight of the run that produced the solution.
  Cost winning_weight = 0.0;

  WorkerStats totals() const {
    WorkerStats t;
    for (const WorkerStats& w : workers) {
      t.expanded += w.expanded;
      t.generated += w.generated;
      t.sent += w.sent;
      t.received += w.received;
      t.messages_sent += w.messages_sent;
      t.messages_received += w.messages_received;
      t.reopened += w.reopened;
      t.duplicates += w.duplicates;
      t.stored += w.stored;
      t.ownership_violations += w.ownership_violations;
    }
    return t;
  }
};

// Called for every expansion with the expanding worker's id. Each worker
// calls it from its own thread.
template <class State>
using WorkerObserver = std::function<void(WorkerId worker, const State& state, Cost g, Cost f)>;

}  // namespace parsearch
