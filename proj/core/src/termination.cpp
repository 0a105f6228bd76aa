#include "parsearch/termination/termination.hpp"

#include <algorithm>
#include <string>

#include "parsearch/common.hpp"

namespace parsearch {

TerminationMode parse_termination_mode(std::string_view token) {
  if (token == "two-wave") return TerminationMode::two_wave;
  if (token == "time") return TerminationMode::time;
  throw ConfigError("unknown termination mode '" + std::string(token) + "' (expected two-wave or time)");
}

std::string_view termination_mode_name(TerminationMode mode) {
  return mode == TerminationMode::two_wave ? "two-wave" : "time";
}

bool two_wave_check(std::span<const WaveSample> first_wave, std::span<const WaveSample> second_wave) {
  std::uint64_t received = 0;
  std::uint64_t sent = 0;
  for (const WaveSample& s : first_wave) {
    if (!s.quiescent) return false;
    received += s.received;
  }
  for (const WaveSample& s : second_wave) {
    if (!s.quiescent) return false;
    sent += s.sent;
  }
  return sent == received;
}

TimeStep time_algorithm_step(TerminationCounters& counters, bool quiescent, ControlToken& token) {
  bool ok = quiescent;
  if (counters.received_any && counters.max_received_stamp >= token.time) ok = false;
  counters.clock = std::max(counters.clock, token.time);
  token.time = counters.clock;
  token.sent_total += counters.sent;
  token.received_total += counters.received;
  token.ok = token.ok && ok;
  return ok ? TimeStep::pass : TimeStep::fail;
}

void two_wave_visit(const TerminationCounters& counters, bool quiescent, ControlToken& token) {
  token.accumulated += token.wave == 1 ? counters.received : counters.sent;
  token.ok = token.ok && quiescent;
}

ControlToken TerminationDetector::initiate(TerminationCounters& counters, bool quiescent) {
  in_progress_ = true;
  ++rounds_;
  ControlToken token;
  token.mode = mode_;
  token.round = rounds_;
  token.ok = quiescent;
  if (mode_ == TerminationMode::two_wave) {
    token.wave = 1;
    token.accumulated = counters.received;
  } else {
    ++counters.clock;
    token.time = counters.clock;
    started_time_ = counters.clock;
    token.sent_total = counters.sent;
    token.received_total = counters.received;
  }
  return token;
}

TerminationDetector::Outcome TerminationDetector::on_return(ControlToken& token, TerminationCounters& counters,
                                                           bool quiescent) {
  if (mode_ == TerminationMode::two_wave) {
    if (token.wave == 1) {
      if (!token.ok) {
        in_progress_ = false;
        return Outcome::failed;
      }
      token.first_wave_received = token.accumulated;
      token.wave = 2;
      token.accumulated = counters.sent;
      token.ok = quiescent;
      return Outcome::forward;
    }
    in_progress_ = false;
    return token.ok && token.accumulated == token.first_wave_received ? Outcome::terminated : Outcome::failed;
  }
  // Time algorithm: the initiator must not have received anything stamped
  // after the round began, and the ring totals must balance.
  in_progress_ = false;
  counters.clock = std::max(counters.clock, token.time);
  const bool late_message = counters.received_any && counters.max_received_stamp >= started_time_;
  const bool ok = token.ok && quiescent && !late_message && token.sent_total == token.received_total;
  return ok ? Outcome::terminated : Outcome::failed;
}

}  // namespace parsearch
