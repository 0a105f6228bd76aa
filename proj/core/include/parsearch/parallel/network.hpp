#pragma once

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <variant>
#include <vector>

#include "parsearch/common.hpp"
#include "parsearch/termination/termination.hpp"

namespace parsearch {

// (n', g1, n): a generated state, the cost of the path that reached it and the
// state it was generated from.
template <class State>
struct Triplet {
  State state;
  Cost g;
  State parent;
  bool has_parent;
};

template <class State>
struct WorkMessage {
  WorkerId sender = 0;
  std::uint64_t sequence = 0;
  std::uint64_t stamp = 0;
  std::vector<Triplet<State>> batch;
};

template <class State>
using Packet = std::variant<WorkMessage<State>, ControlToken>;

// Mailbox substrate. Delivery is reliable and FIFO per (sender, receiver).
template <class State>
class Network {
 public:
  virtual ~Network() = default;
  virtual void send(WorkerId from, WorkerId to, Packet<State> packet) = 0;
  /// Moves everything delivered to `me` into `out` (appending).
  virtual void drain(WorkerId me, std::vector<Packet<State>>& out) = 0;
};

// Many-producer single-consumer queues, one per worker.
template <class State>
class ThreadedNetwork final : public Network<State> {
 public:
  explicit ThreadedNetwork(std::uint32_t workers) {
    boxes_.reserve(workers);
    for (std::uint32_t i = 0; i < workers; ++i) boxes_.push_back(std::make_unique<Box>());
  }

  void send(WorkerId, WorkerId to, Packet<State> packet) override {
    Box& box = *boxes_[to];
    {
      std::lock_guard lock(box.mutex);
      box.queue.push_back(std::move(packet));
    }
    box.ready.notify_one();
  }

  void drain(WorkerId me, std::vector<Packet<State>>& out) override {
    Box& box = *boxes_[me];
    std::lock_guard lock(box.mutex);
    for (auto& p : box.queue) out.push_back(std::move(p));
    box.queue.clear();
  }

  /// Blocks until something is delivered to `me`, `timeout` passes or wake_all().
  void wait(WorkerId me, std::chrono::microseconds timeout) {
    Box& box = *boxes_[me];
    std::unique_lock lock(box.mutex);
    box.ready.wait_for(lock, timeout, [&] { return !box.queue.empty() || box.woken; });
    box.woken = false;
  }

  void wake_all() {
    for (auto& box : boxes_) {
      {
        std::lock_guard lock(box->mutex);
        box->woken = true;
      }
      box->ready.notify_all();
    }
  }

  bool empty(WorkerId me) {
    Box& box = *boxes_[me];
    std::lock_guard lock(box.mutex);
    return box.queue.empty();
  }

 private:
  struct Box {
    std::mutex mutex;
    std::condition_variable ready;
    std::vector<Packet<State>> queue;
    bool woken = false;
  };

  std::vector<std::unique_ptr<Box>> boxes_;
};

// Single-threaded network for the deterministic interleaver: sent packets wait
// in per-(sender, receiver) channels until the schedule delivers them.
template <class State>
class InterleavedNetwork final : public Network<State> {
 public:
  explicit InterleavedNetwork(std::uint32_t workers)
      : workers_(workers), channels_(static_cast<std::size_t>(workers) * workers), inboxes_(workers) {}

  void send(WorkerId from, WorkerId to, Packet<State> packet) override {
    channels_[channel(from, to)].push_back(std::move(packet));
  }

  void drain(WorkerId me, std::vector<Packet<State>>& out) override {
    for (auto& p : inboxes_[me]) out.push_back(std::move(p));
    inboxes_[me].clear();
  }

  /// Moves the oldest in-flight packet from `from` to `to` into the receiver's mailbox.
  void deliver(WorkerId from, WorkerId to) {
    auto& queue = channels_[channel(from, to)];
    inboxes_[to].push_back(std::move(queue.front()));
    queue.pop_front();
  }

  std::uint32_t workers() const { return workers_; }
  const std::deque<Packet<State>>& in_flight(WorkerId from, WorkerId to) const {
    return channels_[channel(from, to)];
  }
  const std::vector<Packet<State>>& inbox(WorkerId me) const { return inboxes_[me]; }

 private:
  std::size_t channel(WorkerId from, WorkerId to) const { return static_cast<std::size_t>(from) * workers_ + to; }

  std::uint32_t workers_;
  std::vector<std::deque<Packet<State>>> channels_;
  std::vector<std::vector<Packet<State>>> inboxes_;
};

}  // namespace parsearch
