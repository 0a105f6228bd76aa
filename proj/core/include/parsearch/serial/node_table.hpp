#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

// OPEN and CLOSED for one search (or one worker). Each state has a single
// entry; OPEN is a binary heap ordered by (f, -g, insertion sequence) with
// lazy deletion of superseded heap items.
template <class State>
class NodeTable {
 public:
  struct Entry {
    State state;
    State parent;
    Cost g;
    Cost h;
    std::uint64_t seq;
    bool has_parent;
    bool closed;
  };

  enum class OfferResult { inserted, improved, reopened, duplicate };

  /// weight scales h in the priority; an infinite weight orders by h alone.
  explicit NodeTable(Cost weight = 1.0) : weight_(weight) {}

  Cost priority(Cost g, Cost h) const { return std::isinf(weight_) ? h : g + weight_ * h; }

  /// Offers a path of cost g to s. Improvements must beat the stored g by more
  /// than kCostEpsilon; a closed entry that is improved moves back to OPEN.
  template <class HeuristicFn>
  OfferResult offer(const State& s, Cost g, const State* parent, HeuristicFn&& heuristic) {
    auto [it, fresh] = index_.try_emplace(s, static_cast<std::uint32_t>(entries_.size()));
    if (fresh) {
      entries_.push_back(Entry{s, parent ? *parent : s, g, static_cast<Cost>(heuristic(s)), 0, parent != nullptr, false});
      ++open_count_;
      push(it->second);
      return OfferResult::inserted;
    }
    const std::uint32_t index = it->second;
    Entry& e = entries_[index];
    if (!(g < e.g - kCostEpsilon)) return OfferResult::duplicate;
    e.g = g;
    e.has_parent = parent != nullptr;
    if (parent) e.parent = *parent;
    OfferResult result = OfferResult::improved;
    if (e.closed) {
      e.closed = false;
      ++open_count_;
      result = OfferResult::reopened;
    }
    push(index);
    return result;
  }

  /// Removes and closes the best open entry if its priority is below `limit`.
  std::optional<std::uint32_t> pop(Cost limit = kInfiniteCost) {
    drop_stale();
    if (heap_.empty() || !(heap_.top().f < limit)) return std::nullopt;
    const std::uint32_t index = heap_.top().index;
    heap_.pop();
    entries_[index].closed = true;
    --open_count_;
    return index;
  }

  /// Smallest priority on OPEN, or infinity when OPEN is empty.
  Cost min_priority() {
    drop_stale();
    return heap_.empty() ? kInfiniteCost : heap_.top().f;
  }

  const Entry& entry(std::uint32_t index) const { return entries_[index]; }

  const Entry* find(const State& s) const {
    auto it = index_.find(s);
    return it == index_.end() ? nullptr : &entries_[it->second];
  }

  std::optional<std::uint32_t> index_of(const State& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t size() const { return entries_.size(); }
  std::size_t open_count() const { return open_count_; }
  bool open_empty() const { return open_count_ == 0; }

  template <class Fn>
  void for_each_open(Fn&& fn) const {
    for (const Entry& e : entries_)
      if (!e.closed) fn(e);
  }

 private:
  struct HeapItem {
    Cost f;
    Cost g;
    std::uint64_t seq;
    std::uint32_t index;
  };

  struct Worse {
    bool operator()(const HeapItem& a, const HeapItem& b) const {
      if (a.f != b.f) return a.f > b.f;
      if (a.g != b.g) return a.g < b.g;
      return a.seq > b.seq;
    }
  };

  void push(std::uint32_t index) {
    Entry& e = entries_[index];
    e.seq = next_seq_++;
    heap_.push(HeapItem{priority(e.g, e.h), e.g, e.seq, index});
  }

  void drop_stale() {
    while (!heap_.empty()) {
      const HeapItem& top = heap_.top();
      const Entry& e = entries_[top.index];
      if (!e.closed && e.seq == top.seq) return;
      heap_.pop();
    }
  }

  Cost weight_;
  std::vector<Entry> entries_;
  std::unordered_map<State, std::uint32_t> index_;
  std::priority_queue<HeapItem, std::vector<HeapItem>, Worse> heap_;
  std::uint64_t next_seq_ = 0;
  std::size_t open_count_ = 0;
};

}  // namespace parsearch
