#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

inline constexpr int kMaxLatticeDims = 8;

struct LatticePoint {
  std::array<std::uint16_t, kMaxLatticeDims> x{};
  std::uint8_t dims = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

// Moves increment a nonempty subset of coordinates by one; the subset is
// encoded as a bit mask and step_costs[mask] prices it (index 0 unused).
// Start is the origin, goal is (l_1, ..., l_n).
class LatticeProblem {
 public:
  using State = LatticePoint;

  LatticeProblem(std::vector<std::uint16_t> lengths, std::vector<Cost> step_costs);

  /// Step costs drawn uniformly from {1, 2, 3} per mask.
  static LatticeProblem random(int dims, int length, std::uint64_t seed);
  /// Every step costs 1.
  static LatticeProblem uniform(int dims, int length);

  int dims() const { return static_cast<int>(lengths_.size()); }
  std::span<const std::uint16_t> lengths() const { return lengths_; }
  Cost step_cost(unsigned mask) const { return step_costs_[mask]; }

  LatticePoint initial() const;
  bool is_goal(const LatticePoint& p) const;
  void expand(const LatticePoint& p, std::vector<Successor<LatticePoint>>& out) const;
  // max_i (l_i - x_i) times the cheapest step.
  Cost h(const LatticePoint& p) const;
  void features(const LatticePoint& p, std::vector<FeatureId>& out) const;
  std::size_t feature_count() const { return feature_count_; }
  void append_canonical(const LatticePoint& p, std::string& out) const;
  std::uint64_t coordinate_sum(const LatticePoint& p) const;

  FeatureId coordinate_feature(int axis, int value) const {
    return static_cast<FeatureId>(axis_offset_[axis] + value);
  }

 private:
  std::vector<std::uint16_t> lengths_;
  std::vector<Cost> step_costs_;
  std::vector<std::size_t> axis_offset_;
  std::size_t feature_count_ = 0;
  Cost cheapest_step_ = 0.0;
};

}  // namespace parsearch

template <>
struct std::hash<parsearch::LatticePoint> {
  std::size_t operator()(const parsearch::LatticePoint& p) const noexcept {
    return parsearch::hash_bytes(p.x.data(), sizeof(std::uint16_t) * p.dims);
  }
};
