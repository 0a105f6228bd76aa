#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "parsearch/common.hpp"
#include "parsearch/termination/termination.hpp"

using namespace parsearch;

namespace {

// A ring of workers whose counters the test edits directly. Work messages are
// modelled only by their effect on the counters.
struct Ring {
  explicit Ring(std::size_t n, TerminationMode mode) : counters(n), quiet(n, true), detector(mode) {}

  // Worker `from` sends a message; returns its stamp.
  std::uint64_t send(std::size_t from) { return counters[from].on_send(); }
  void receive(std::size_t to, std::uint64_t stamp) { counters[to].on_receive(stamp); }

  // Runs one detection round; `between` fires after each non-initiator visit.
  TerminationDetector::Outcome round(const std::function<void(std::size_t)>& between = {}) {
    ControlToken token = detector.initiate(counters[0], quiet[0]);
    while (true) {
      for (std::size_t i = 1; i < counters.size(); ++i) {
        if (token.mode == TerminationMode::two_wave)
          two_wave_visit(counters[i], quiet[i], token);
        else
          time_algorithm_step(counters[i], quiet[i], token);
        if (between) between(i);
      }
      auto outcome = detector.on_return(token, counters[0], quiet[0]);
      if (outcome != TerminationDetector::Outcome::forward) return outcome;
    }
  }

  std::vector<TerminationCounters> counters;
  std::vector<bool> quiet;
  TerminationDetector detector;
};

using Outcome = TerminationDetector::Outcome;

}  // namespace

TEST(TwoWaveCheck, BalancedAndQuiescent) {
  const std::vector<WaveSample> first{{true, 3, 2}, {true, 1, 2}}, second{{true, 3, 2}, {true, 1, 2}};
  EXPECT_TRUE(two_wave_check(first, second));
}

TEST(TwoWaveCheck, MessageSentBetweenWaves) {
  const std::vector<WaveSample> first{{true, 3, 2}, {true, 1, 2}}, second{{true, 4, 2}, {true, 1, 2}};
  EXPECT_FALSE(two_wave_check(first, second));
}

TEST(TwoWaveCheck, BusyWorker) {
  const std::vector<WaveSample> first{{true, 0, 0}, {false, 0, 0}}, second{{true, 0, 0}, {true, 0, 0}};
  EXPECT_FALSE(two_wave_check(first, second));
}

TEST(TwoWave, QuietRingTerminates) {
  Ring ring(4, TerminationMode::two_wave);
  ring.receive(2, ring.send(1));
  ring.receive(0, ring.send(3));
  EXPECT_EQ(ring.round(), Outcome::terminated);
  EXPECT_EQ(ring.detector.rounds(), 1u);
  EXPECT_FALSE(ring.detector.in_progress());
}

TEST(TwoWave, InFlightMessageBlocksDetection) {
  Ring ring(3, TerminationMode::two_wave);
  ring.send(1);  // never received
  EXPECT_EQ(ring.round(), Outcome::failed);
}

TEST(TwoWave, BusyWorkerBlocksDetection) {
  Ring ring(3, TerminationMode::two_wave);
  ring.quiet[2] = false;
  EXPECT_EQ(ring.round(), Outcome::failed);
  ring.quiet[2] = true;
  EXPECT_EQ(ring.round(), Outcome::terminated);
  EXPECT_EQ(ring.detector.rounds(), 2u);
}

TEST(TwoWave, MessageBehindTheTokenIsCaught) {
  // Worker 2 sends to worker 1 after worker 1 was sampled in wave 1 and the
  // message is received before wave 2 reaches anyone: the first wave's R*
  // misses it, the second wave's S* counts it.
  Ring ring(3, TerminationMode::two_wave);
  int visits = 0;
  auto outcome = ring.round([&](std::size_t i) {
    if (i == 2 && visits++ == 0) ring.receive(1, ring.send(2));
  });
  EXPECT_EQ(outcome, Outcome::failed);
}

TEST(TimeAlgorithm, QuietRingTerminates) {
  Ring ring(4, TerminationMode::time);
  ring.receive(2, ring.send(1));
  EXPECT_EQ(ring.round(), Outcome::terminated);
}

TEST(TimeAlgorithm, InFlightMessageBlocksDetection) {
  Ring ring(3, TerminationMode::time);
  ring.send(2);
  EXPECT_EQ(ring.round(), Outcome::failed);
}

TEST(TimeAlgorithm, LateStampFails) {
  // A message stamped during the round reaches a worker the token has not
  // visited yet.
  Ring ring(3, TerminationMode::time);
  auto outcome = ring.round([&](std::size_t i) {
    if (i == 1) ring.receive(2, ring.send(1));
  });
  EXPECT_EQ(outcome, Outcome::failed);
  // The next round sees a consistent cut.
  EXPECT_EQ(ring.round(), Outcome::terminated);
}

TEST(TimeAlgorithm, ClocksMergeAlongTheRing) {
  TerminationCounters c;
  c.clock = 2;
  ControlToken token;
  token.mode = TerminationMode::time;
  token.time = 5;
  EXPECT_EQ(time_algorithm_step(c, true, token), TimeStep::pass);
  EXPECT_EQ(c.clock, 5u);
  EXPECT_EQ(token.time, 5u);
  c.on_receive(5);
  EXPECT_EQ(time_algorithm_step(c, true, token), TimeStep::fail);
  EXPECT_FALSE(token.ok);
}

TEST(TimeAlgorithm, BothModesAgreeOnQuiescence) {
  for (auto mode : {TerminationMode::two_wave, TerminationMode::time}) {
    Ring ring(5, mode);
    for (std::size_t i = 0; i < 5; ++i) ring.receive((i + 1) % 5, ring.send(i));
    EXPECT_EQ(ring.round(), Outcome::terminated) << termination_mode_name(mode);
    ring.send(3);
    EXPECT_EQ(ring.round(), Outcome::failed) << termination_mode_name(mode);
  }
}

TEST(TerminationMode, Names) {
  EXPECT_EQ(parse_termination_mode("two-wave"), TerminationMode::two_wave);
  EXPECT_EQ(parse_termination_mode("time"), TerminationMode::time);
  EXPECT_EQ(termination_mode_name(TerminationMode::time), "time");
  EXPECT_THROW(parse_termination_mode("ring"), ConfigError);
}
