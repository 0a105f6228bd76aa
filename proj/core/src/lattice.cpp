#include "parsearch/domains/lattice.hpp"

#include <algorithm>
#include <random>

namespace parsearch {

LatticeProblem::LatticeProblem(std::vector<std::uint16_t> lengths, std::vector<Cost> step_costs)
    : lengths_(std::move(lengths)), step_costs_(std::move(step_costs)) {
  const int n = dims();
  if (n < 1 || n > kMaxLatticeDims)
    throw ConfigError("lattice dimension must be in [1, " + std::to_string(kMaxLatticeDims) + "]");
  if (step_costs_.size() != (std::size_t{1} << n))
    throw ConfigError("lattice needs one step cost per nonempty axis subset (2^n entries, index 0 unused)");
  cheapest_step_ = kInfiniteCost;
  for (std::size_t mask = 1; mask < step_costs_.size(); ++mask) {
    if (!(step_costs_[mask] >= 0.0)) throw ConfigError("lattice step costs must be nonnegative");
    cheapest_step_ = std::min(cheapest_step_, step_costs_[mask]);
  }
  axis_offset_.resize(n);
  for (int axis = 0; axis < n; ++axis) {
    axis_offset_[axis] = feature_count_;
    feature_count_ += static_cast<std::size_t>(lengths_[axis]) + 1;
  }
}

LatticeProblem LatticeProblem::random(int dims, int length, std::uint64_t seed) {
  if (dims < 1 || dims > kMaxLatticeDims) throw ConfigError("lattice dimension out of range");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(1, 3);
  std::vector<Cost> costs(std::size_t{1} << dims, 0.0);
  for (std::size_t mask = 1; mask < costs.size(); ++mask) costs[mask] = pick(rng);
  return LatticeProblem(std::vector<std::uint16_t>(dims, static_cast<std::uint16_t>(length)), std::move(costs));
}

LatticeProblem LatticeProblem::uniform(int dims, int length) {
  if (dims < 1 || dims > kMaxLatticeDims) throw ConfigError("lattice dimension out of range");
  std::vector<Cost> costs(std::size_t{1} << dims, 1.0);
  costs[0] = 0.0;
  return LatticeProblem(std::vector<std::uint16_t>(dims, static_cast<std::uint16_t>(length)), std::move(costs));
}

LatticePoint LatticeProblem::initial() const {
  LatticePoint p;
  p.dims = static_cast<std::uint8_t>(dims());
  return p;
}

bool LatticeProblem::is_goal(const LatticePoint& p) const {
  for (int axis = 0; axis < dims(); ++axis)
    if (p.x[axis] != lengths_[axis]) return false;
  return true;
}

void LatticeProblem::expand(const LatticePoint& p, std::vector<Successor<LatticePoint>>& out) const {
  const int n = dims();
  unsigned open_axes = 0;
  for (int axis = 0; axis < n; ++axis)
    if (p.x[axis] < lengths_[axis]) open_axes |= 1u << axis;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if ((mask & open_axes) != mask) continue;
    LatticePoint next = p;
    for (int axis = 0; axis < n; ++axis)
      if (mask & (1u << axis)) ++next.x[axis];
    out.push_back({next, step_costs_[mask]});
  }
}

Cost LatticeProblem::h(const LatticePoint& p) const {
  int remaining = 0;
  for (int axis = 0; axis < dims(); ++axis) remaining = std::max(remaining, lengths_[axis] - p.x[axis]);
  return remaining * cheapest_step_;
}

void LatticeProblem::features(const LatticePoint& p, std::vector<FeatureId>& out) const {
  for (int axis = 0; axis < dims(); ++axis) out.push_back(coordinate_feature(axis, p.x[axis]));
}

void LatticeProblem::append_canonical(const LatticePoint& p, std::string& out) const {
  out.append(reinterpret_cast<const char*>(p.x.data()), sizeof(std::uint16_t) * p.dims);
}

std::uint64_t LatticeProblem::coordinate_sum(const LatticePoint& p) const {
  std::uint64_t sum = 0;
  for (int axis = 0; axis < dims(); ++axis) sum += p.x[axis];
  return sum;
}

}  // namespace parsearch
