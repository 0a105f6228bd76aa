#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "parsearch/allocation/allocation.hpp"
#include "parsearch/common.hpp"

using namespace parsearch;

namespace {

SolverProfile profile(std::uint64_t w_plus, double failing_time = 1.0) {
  SolverProfile p;
  p.w_plus = w_plus;
  p.failing_time = failing_time;
  return p;
}

const CostModel kDiscrete{CostModelKind::discrete, true};
const CostModel kContinuous{CostModelKind::continuous, true};

}  // namespace

TEST(Geometric, Sequences) {
  EXPECT_EQ(geometric_sequence(2.0, 4), (std::vector<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_EQ(geometric_sequence(1.5, 4), (std::vector<std::uint64_t>{1, 2, 3, 4}));
  EXPECT_EQ(geometric_sequence(3.0, 1), (std::vector<std::uint64_t>{1}));
  // 1.1^i drifts off integers; only near-exact powers snap.
  EXPECT_EQ(geometric_sequence(1.1, 3), (std::vector<std::uint64_t>{1, 2, 2}));
  EXPECT_EQ(geometric_sequence(10.0, 16).back(), 1'000'000'000'000'000ull);
  EXPECT_THROW(geometric_sequence(1.0, 3), std::invalid_argument);
  EXPECT_THROW(geometric_sequence(2.0, 0), std::invalid_argument);
}

TEST(Bounds, DoublingValues) {
  auto r = ratio_bounds(2.0);
  EXPECT_EQ(r.worst, 4.0);
  EXPECT_EQ(r.average, 8.0 / 3.0);
  EXPECT_THROW(ratio_bounds(1.0), std::invalid_argument);
  EXPECT_THROW(ratio_bounds(0.5), std::invalid_argument);
}

TEST(Bounds, WorstCaseMinimizedByDoubling) {
  double best_b = 0, best = kInfiniteCost;
  for (int i = 101; i <= 400; ++i) {
    const double b = i / 100.0;
    if (ratio_bounds(b).worst < best) {
      best = ratio_bounds(b).worst;
      best_b = b;
    }
  }
  EXPECT_DOUBLE_EQ(best_b, 2.0);
  // Larger bases improve the average bound.
  EXPECT_LT(ratio_bounds(3.0).average, ratio_bounds(2.0).average);
}

TEST(Simulation, SolvedOnFirstIteration) {
  auto r = ia_total_cost(profile(1), 2.0, kDiscrete);
  ASSERT_EQ(r.iterations.size(), 1u);
  EXPECT_EQ(r.total_cost, 1.0);
  EXPECT_EQ(optimal_cost(profile(1), kDiscrete), 1.0);
}

TEST(Simulation, DoublingUpToTheMinimalWidth) {
  auto r = ia_total_cost(profile(5), 2.0, kDiscrete);
  ASSERT_EQ(r.iterations.size(), 4u);
  EXPECT_EQ(r.iterations.back().width, 8u);
  EXPECT_TRUE(r.iterations.back().solved);
  EXPECT_FALSE(r.iterations[2].solved);
  EXPECT_EQ(r.total_cost, 15.0);  // 1 + 2 + 4 + 8 HAU-hours
  EXPECT_EQ(optimal_cost(profile(5), kDiscrete), 5.0);
}

TEST(Simulation, ContinuousCostIsExact) {
  SolverProfile p = profile(6, 0.3);
  p.makespan = [](std::uint64_t v) { return 10.0 / static_cast<double>(v); };
  auto r = ia_total_cost(p, 2.0, kContinuous);
  double expected = 0;
  for (const auto& it : r.iterations) expected += it.duration * static_cast<double>(it.width);
  EXPECT_EQ(r.total_cost, expected);
  EXPECT_DOUBLE_EQ(r.total_cost, 0.3 * (1 + 2 + 4) + 10.0);
}

TEST(Simulation, SpareTimeReuse) {
  // Four quarter-hour failures fit in the first billed hour at the widest
  // width used there.
  SolverProfile p = profile(16, 0.25);
  auto reuse = ia_total_cost(p, 2.0, kDiscrete);
  auto separate = ia_total_cost(p, 2.0, CostModel{CostModelKind::discrete, false});
  // Hour 0: widths 1, 2, 4, 8 -> 8. Hour 1: the final 16-wide run.
  EXPECT_EQ(reuse.total_cost, 8.0 + 16.0);
  EXPECT_EQ(separate.total_cost, 1.0 + 2 + 4 + 8 + 16);
}

TEST(Simulation, MaxWidthExhausted) {
  SolverProfile p = profile(100);
  p.max_width = 64;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p.max_width = 120;
  EXPECT_THROW(ia_total_cost(p, 2.0, kDiscrete), std::runtime_error);
}

TEST(Simulation, MonotoneInMinimalWidth) {
  double last = 0;
  for (std::uint64_t w = 1; w <= 256; ++w) {
    const double c = ia_total_cost(profile(w), 2.0, kDiscrete).total_cost;
    EXPECT_GE(c, last);
    last = c;
  }
}

TEST(Sweep, WorstCaseNeverExceedsFour) {
  auto s = ia_sweep(2.0, 1024, kDiscrete);
  ASSERT_EQ(s.rows.size(), 1024u);
  EXPECT_LE(s.max_ratio, 4.0 + 1e-12);
  // Frozen from the exhaustive sweep.
  EXPECT_DOUBLE_EQ(s.max_ratio, 2047.0 / 513.0);  // W+ = 513 pays 1 + 2 + ... + 1024
  EXPECT_NEAR(s.expected_cost_ratio, 2.662, 1e-3);
  EXPECT_NEAR(s.mean_ratio, 2.755, 1e-3);
}

TEST(Sweep, RatiosOfExpectationsApproachEightThirds) {
  // On W+ uniform over (2^(k-1), 2^k] the ratio of mean costs is exactly
  // (2^(k+1) - 1) / mean(W+), which tends to 8/3.
  for (int k = 4; k <= 10; ++k) {
    const std::uint64_t lo = (1u << (k - 1)) + 1, hi = 1u << k;
    double total = 0, optimal = 0;
    for (std::uint64_t w = lo; w <= hi; ++w) {
      total += ia_total_cost(profile(w), 2.0, kDiscrete).total_cost;
      optimal += static_cast<double>(w);
    }
    const double n = static_cast<double>(hi - lo + 1);
    EXPECT_DOUBLE_EQ(total / n, std::pow(2.0, k + 1) - 1);
    EXPECT_LE(total / optimal, 8.0 / 3.0);
  }
}

TEST(Sweep, SmallFailingTimesStayBounded) {
  for (double e : {1.0, 0.5, 0.25}) {
    auto s = ia_sweep(2.0, 256, kDiscrete, e);
    EXPECT_LE(s.max_ratio, 4.0 + 1e-12) << "E=" << e;
  }
}

TEST(CostModelNames, RoundTrip) {
  EXPECT_EQ(parse_cost_model(cost_model_name(CostModelKind::discrete)), CostModelKind::discrete);
  EXPECT_EQ(parse_cost_model("continuous"), CostModelKind::continuous);
  EXPECT_THROW(parse_cost_model("hourly"), ConfigError);
}
