#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace parsearch {

/// [ceil(b^0), ..., ceil(b^(k-1))]. Powers within a relative 1e-12 of an
/// integer are treated as that integer.
std::vector<std::uint64_t> geometric_sequence(double b, std::size_t k);

// How a ravenous solver behaves as a function of the HAUs it gets.
struct SolverProfile {
  // Minimal width: fewest HAUs on which the solver succeeds.
  std::uint64_t w_plus = 1;
  // Makespan in hours on v >= w_plus HAUs.
  std::function<double(std::uint64_t)> makespan = [](std::uint64_t) { return 1.0; };
  // Hours a failing iteration runs before exhausting memory.
  double failing_time = 1.0;
  // Iterative allocation gives up beyond this width.
  std::uint64_t max_width = std::uint64_t{1} << 20;

  void validate() const;
};

enum class CostModelKind { continuous, discrete };

std::string_view cost_model_name(CostModelKind kind);
CostModelKind parse_cost_model(std::string_view token);

struct CostModel {
  CostModelKind kind = CostModelKind::discrete;
  // Discrete only. Iterations run back to back; one that finishes inside the
  // last hour already paid for reuses it and pays only for extra HAUs.
  // Without reuse each iteration is billed on its own as ceil(duration) * width.
  bool spare_time_reuse = true;
};

struct IterationCost {
  std::uint64_t width;
  double duration;
  bool solved;
};

struct IaResult {
  double total_cost = 0.0;
  std::vector<IterationCost> iterations;
};

/// Runs the geometric strategy with base b until an iteration succeeds.
/// Throws std::runtime_error if max_width is passed first.
IaResult ia_total_cost(const SolverProfile& profile, double b, const CostModel& model);

/// Cost of solving directly on the cheapest width v >= w_plus (v <= max_width).
double optimal_cost(const SolverProfile& profile, const CostModel& model);

struct RatioBounds {
  double worst;
  double average;
};

/// (b^2 / (b - 1), 2 b^2 / (b^2 - 1)); throws std::invalid_argument for b <= 1.
RatioBounds ratio_bounds(double b);

struct SweepRow {
  std::uint64_t w_plus;
  double b;
  CostModelKind model;
  double total_cost;
  double optimal_cost;
  double ratio;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  double max_ratio = 0.0;
  // Mean of the per-instance ratios.
  double mean_ratio = 0.0;
  // Ratio of the mean costs, sum(total) / sum(optimal): the average case the
  // analytic bound describes.
  double expected_cost_ratio = 0.0;
};

/// Every w_plus in 1..w_max with the given failing time and a constant
/// makespan of one hour.
SweepSummary ia_sweep(double b, std::uint64_t w_max, const CostModel& model, double failing_time = 1.0);

}  // namespace parsearch
