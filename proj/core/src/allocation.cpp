#include "parsearch/allocation/allocation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "parsearch/common.hpp"

namespace parsearch {
namespace {

constexpr double kTimeSlack = 1e-9;

// Rentals are billed in whole hours, at least one.
double billed_hours(double duration) { return std::max(1.0, std::ceil(duration - kTimeSlack)); }

}  // namespace

std::vector<std::uint64_t> geometric_sequence(double b, std::size_t k) {
  if (!(b > 1.0)) throw std::invalid_argument("geometric base must exceed 1");
  if (k < 1) throw std::invalid_argument("need at least one iteration");
  std::vector<std::uint64_t> out;
  out.reserve(k);
  long double power = 1.0L;
  for (std::size_t i = 0; i < k; ++i) {
    const long double nearest = std::round(power);
    const long double value = std::fabs(power - nearest) <= 1e-12L * nearest ? nearest : std::ceil(power);
    if (value > 1.8e19L) throw std::overflow_error("geometric sequence exceeds 64 bits");
    out.push_back(static_cast<std::uint64_t>(value));
    power *= b;
  }
  return out;
}

void SolverProfile::validate() const {
  if (w_plus < 1) throw std::invalid_argument("minimal width must be at least 1");
  if (!(failing_time >= 0.0)) throw std::invalid_argument("failing iteration time must be nonnegative");
  if (!makespan) throw std::invalid_argument("profile needs a makespan function");
  if (max_width < w_plus) throw std::invalid_argument("max width below minimal width");
}

std::string_view cost_model_name(CostModelKind kind) {
  return kind == CostModelKind::discrete ? "discrete" : "continuous";
}

CostModelKind parse_cost_model(std::string_view token) {
  if (token == "discrete") return CostModelKind::discrete;
  if (token == "continuous") return CostModelKind::continuous;
  throw ConfigError("unknown cost model '" + std::string(token) + "' (expected discrete or continuous)");
}

IaResult ia_total_cost(const SolverProfile& profile, double b, const CostModel& model) {
  profile.validate();
  if (!(b > 1.0)) throw std::invalid_argument("geometric base must exceed 1");
  IaResult result;
  long double power = 1.0L;
  while (true) {
    const long double nearest = std::round(power);
    const auto width = static_cast<std::uint64_t>(std::fabs(power - nearest) <= 1e-12L * nearest ? nearest
                                                                                                  : std::ceil(power));
    if (width > profile.max_width)
      throw std::runtime_error("iterative allocation passed the maximum width " + std::to_string(profile.max_width));
    const bool solved = width >= profile.w_plus;
    result.iterations.push_back({width, solved ? profile.makespan(width) : profile.failing_time, solved});
    if (solved) break;
    power *= b;
  }

  if (model.kind == CostModelKind::continuous) {
    for (const auto& it : result.iterations) result.total_cost += it.duration * static_cast<double>(it.width);
    return result;
  }
  if (!model.spare_time_reuse) {
    for (const auto& it : result.iterations) result.total_cost += billed_hours(it.duration) * static_cast<double>(it.width);
    return result;
  }
  // Iterations run back to back. A rental is billed in whole hours from the
  // moment it starts; an iteration that ends inside the last paid hour of the
  // previous rental reuses it and pays only for the HAUs it adds.
  double now = 0.0, paid_until = 0.0;
  std::uint64_t paid_width = 0;
  for (const auto& it : result.iterations) {
    if (paid_width > 0 && now + it.duration <= paid_until + kTimeSlack) {
      if (it.width > paid_width) {
        result.total_cost += static_cast<double>(it.width - paid_width);
        paid_width = it.width;
      }
    } else {
      const double hours = billed_hours(it.duration);
      result.total_cost += hours * static_cast<double>(it.width);
      paid_until = now + hours;
      paid_width = it.width;
    }
    now += it.duration;
  }
  return result;
}

double optimal_cost(const SolverProfile& profile, const CostModel& model) {
  profile.validate();
  double best = kInfiniteCost;
  for (std::uint64_t v = profile.w_plus; v <= profile.max_width; ++v) {
    const double t = profile.makespan(v);
    const double hours = model.kind == CostModelKind::discrete ? billed_hours(t) : t;
    best = std::min(best, hours * static_cast<double>(v));
    // A discrete run is billed at least one hour per HAU.
    if (model.kind == CostModelKind::discrete && static_cast<double>(v + 1) >= best) break;
  }
  return best;
}

RatioBounds ratio_bounds(double b) {
  if (!(b > 1.0)) throw std::invalid_argument("ratio bounds need b > 1");
  return {b * b / (b - 1.0), 2.0 * b * b / (b * b - 1.0)};
}

SweepSummary ia_sweep(double b, std::uint64_t w_max, const CostModel& model, double failing_time) {
  if (!(b > 1.0)) throw std::invalid_argument("geometric base must exceed 1");
  if (w_max < 1) throw std::invalid_argument("sweep needs w_max >= 1");
  SweepSummary summary;
  double ratio_sum = 0.0, total_sum = 0.0, optimal_sum = 0.0;
  for (std::uint64_t w = 1; w <= w_max; ++w) {
    SolverProfile profile;
    profile.w_plus = w;
    profile.failing_time = failing_time;
    // IA never goes past b * w_plus (plus rounding).
    profile.max_width = 2 * static_cast<std::uint64_t>(std::ceil(b)) * w + 2;
    const double total = ia_total_cost(profile, b, model).total_cost;
    const double optimal = optimal_cost(profile, model);
    const double ratio = total / optimal;
    summary.rows.push_back({w, b, model.kind, total, optimal, ratio});
    summary.max_ratio = std::max(summary.max_ratio, ratio);
    ratio_sum += ratio;
    total_sum += total;
    optimal_sum += optimal;
  }
  summary.mean_ratio = ratio_sum / static_cast<double>(w_max);
  summary.expected_cost_ratio = total_sum / optimal_sum;
  return summary;
}

}  // namespace parsearch
