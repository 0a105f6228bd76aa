#pragma once

#include <cstdint>
#include <span>
#include <string_view>

namespace parsearch {

enum class TerminationMode { two_wave, time };

TerminationMode parse_termination_mode(std::string_view token);
std::string_view termination_mode_name(TerminationMode mode);

// Per-worker counters, owned and updated by their worker only. Counts are of
// work messages (batches), not of the triplets inside them.
struct TerminationCounters {
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
  std::uint64_t clock = 0;
  // Largest time stamp among the work messages received so far.
  std::uint64_t max_received_stamp = 0;
  bool received_any = false;

  /// Returns the stamp to attach to an outgoing work message.
  std::uint64_t on_send() {
    ++sent;
    return clock;
  }

  void on_receive(std::uint64_t stamp) {
    ++received;
    if (!received_any || stamp > max_received_stamp) max_received_stamp = stamp;
    received_any = true;
  }
};

// A worker is quiescent when its mailbox has been drained, its outgoing
// batches are flushed, and no open node has f below the incumbent cost.
struct WaveSample {
  bool quiescent = false;
  std::uint64_t sent = 0;
  std::uint64_t received = 0;
};

/// Two-wave counting check: R* is summed over the first wave, S'* over the
/// second. Holds iff S'* = R* and every sample in both waves is quiescent.
bool two_wave_check(std::span<const WaveSample> first_wave, std::span<const WaveSample> second_wave);

// Control message circulated around the worker ring (worker id order).
struct ControlToken {
  TerminationMode mode = TerminationMode::two_wave;
  std::uint64_t round = 0;
  // two-wave: current wave (1 or 2), R* once wave 1 has completed, and the
  // running sum of the wave's samples.
  int wave = 1;
  std::uint64_t first_wave_received = 0;
  std::uint64_t accumulated = 0;
  // time algorithm
  std::uint64_t time = 0;
  std::uint64_t sent_total = 0;
  std::uint64_t received_total = 0;
  bool ok = true;
};

enum class TimeStep { pass, fail };

/// Visit of a non-initiating worker under the time algorithm: fails if the
/// worker holds a received message stamped at or after the token time, then
/// merges clocks (C = max(C, T), T = C) and accumulates the counters.
TimeStep time_algorithm_step(TerminationCounters& counters, bool quiescent, ControlToken& token);

/// Two-wave visit of a non-initiating worker.
void two_wave_visit(const TerminationCounters& counters, bool quiescent, ControlToken& token);

// Initiator-side state machine (worker 0).
class TerminationDetector {
 public:
  enum class Outcome { forward, terminated, failed };

  explicit TerminationDetector(TerminationMode mode) : mode_(mode) {}

  TerminationMode mode() const { return mode_; }
  bool in_progress() const { return in_progress_; }
  std::uint64_t rounds() const { return rounds_; }

  /// Starts a round: a wave-1 token for two-wave, a fresh clock tick for the
  /// time algorithm.
  ControlToken initiate(TerminationCounters& counters, bool quiescent);

  /// Token came back around the ring. `forward` means wave 2 has started and
  /// the token must go round again.
  Outcome on_return(ControlToken& token, TerminationCounters& counters, bool quiescent);

 private:
  TerminationMode mode_;
  bool in_progress_ = false;
  std::uint64_t rounds_ = 0;
  std::uint64_t started_time_ = 0;
};

}  // namespace parsearch
