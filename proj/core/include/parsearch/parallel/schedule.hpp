#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

struct ScheduleAction {
  enum class Kind { step, deliver };
  Kind kind = Kind::step;
  // step: the worker to run; deliver: the channel to pop.
  WorkerId worker = 0;
  WorkerId from = 0;
  WorkerId to = 0;
};

// Picks the next action of the deterministic interleaver among the enabled
// ones. Implementations must be deterministic given their construction.
class SchedulePolicy {
 public:
  virtual ~SchedulePolicy() = default;
  virtual std::size_t choose(std::span<const ScheduleAction> enabled) = 0;
};

// With probability `delivery_bias` delivers a random in-flight packet (when
// any exists), otherwise steps a random enabled worker. Low biases hold
// messages back and provoke out-of-order expansions.
class RandomSchedule final : public SchedulePolicy {
 public:
  explicit RandomSchedule(std::uint64_t seed, double delivery_bias = 0.5) : rng_(seed), bias_(delivery_bias) {}

  std::size_t choose(std::span<const ScheduleAction> enabled) override {
    steps_.clear();
    deliveries_.clear();
    for (std::size_t i = 0; i < enabled.size(); ++i)
      (enabled[i].kind == ScheduleAction::Kind::step ? steps_ : deliveries_).push_back(i);
    const bool deliver =
        steps_.empty() || (!deliveries_.empty() && std::uniform_real_distribution<double>(0.0, 1.0)(rng_) < bias_);
    const auto& pool = deliver ? deliveries_ : steps_;
    return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng_)];
  }

 private:
  std::mt19937_64 rng_;
  double bias_;
  std::vector<std::size_t> steps_;
  std::vector<std::size_t> deliveries_;
};

// Runs the lowest-numbered worker that can make progress and delivers
// messages only when no worker can: every message arrives as late as possible.
// Deliveries rotate over the channels so a circulating control token cannot
// starve the work messages queued behind other channels.
class StepsFirstSchedule final : public SchedulePolicy {
 public:
  std::size_t choose(std::span<const ScheduleAction> enabled) override {
    for (std::size_t i = 0; i < enabled.size(); ++i)
      if (enabled[i].kind == ScheduleAction::Kind::step) return i;
    std::size_t pick = 0;
    bool found_after = false;
    for (std::size_t i = 0; i < enabled.size(); ++i) {
      const auto key = channel_key(enabled[i]);
      if (key > last_ && (!found_after || key < channel_key(enabled[pick]))) {
        pick = i;
        found_after = true;
      } else if (!found_after && key < channel_key(enabled[pick])) {
        pick = i;
      }
    }
    last_ = channel_key(enabled[pick]);
    return pick;
  }

 private:
  static std::uint64_t channel_key(const ScheduleAction& a) { return (std::uint64_t{a.from} << 32) | a.to; }

  std::uint64_t last_ = 0;
};

}  // namespace parsearch
