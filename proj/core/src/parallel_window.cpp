#include "parsearch/parallel/parallel_window.hpp"

#include <algorithm>

namespace parsearch {

bool BoundDispenser::claimed(Cost bound) const {
  return std::any_of(claimed_.begin(), claimed_.end(), [&](Cost c) { return cost_equal(c, bound); });
}

std::optional<Cost> BoundDispenser::next() {
  if (done()) return std::nullopt;
  Cost pick = kInfiniteCost;
  if (!claimed(lower_bound_)) {
    pick = lower_bound_;
  } else {
    const Cost highest = *std::max_element(claimed_.begin(), claimed_.end());
    for (Cost c : candidates_) {
      if (c > highest + kCostEpsilon && c < best_ - kCostEpsilon) {
        pick = c;
        break;
      }
    }
  }
  if (pick == kInfiniteCost) return std::nullopt;
  claimed_.push_back(pick);
  running_.push_back(pick);
  return pick;
}

void BoundDispenser::report(Cost bound, bool found, Cost solution_cost, bool abandoned, Cost min_pruned,
                            const std::vector<Cost>& lowest_pruned) {
  auto it = std::find(running_.begin(), running_.end(), bound);
  if (it != running_.end()) running_.erase(it);
  if (found) {
    if (solution_cost < best_ - kCostEpsilon) {
      best_ = solution_cost;
      ++provisional_;
    }
    return;
  }
  if (abandoned) return;
  lower_bound_ = std::max(lower_bound_, min_pruned);
  for (Cost c : lowest_pruned) {
    auto pos = std::lower_bound(candidates_.begin(), candidates_.end(), c - kCostEpsilon);
    if (pos != candidates_.end() && cost_equal(*pos, c)) continue;
    candidates_.insert(pos, c);
  }
}

}  // namespace parsearch
