#pragma once

#include <atomic>
#include <mutex>
#include <optional>

#include "parsearch/common.hpp"

namespace parsearch {

// Best solution cost found so far, shared by all workers. The cost only ever
// decreases; reduce() is a compare-and-reduce under the cell's own lock.
template <class State>
class Incumbent {
 public:
  Cost cost() const { return cost_.load(std::memory_order_acquire); }

  bool reduce(Cost cost, const State& goal) {
    std::lock_guard lock(mutex_);
    if (!(cost < cost_.load(std::memory_order_relaxed))) return false;
    goal_ = goal;
    ++updates_;
    cost_.store(cost, std::memory_order_release);
    return true;
  }

  std::optional<State> goal() const {
    std::lock_guard lock(mutex_);
    return goal_;
  }

  std::uint64_t updates() const {
    std::lock_guard lock(mutex_);
    return updates_;
  }

 private:
  std::atomic<Cost> cost_{kInfiniteCost};
  mutable std::mutex mutex_;
  std::optional<State> goal_;
  std::uint64_t updates_ = 0;
};

}  // namespace parsearch
