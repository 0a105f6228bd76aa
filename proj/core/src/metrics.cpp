#include "parsearch/metrics/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace parsearch {

double search_overhead(std::uint64_t parallel_expanded, std::uint64_t serial_expanded) {
  if (serial_expanded == 0) throw std::domain_error("search overhead needs a serial run that expanded something");
  return static_cast<double>(parallel_expanded) / static_cast<double>(serial_expanded) - 1.0;
}

double communication_overhead(std::span<const WorkerStats> workers) {
  std::uint64_t sent = 0, generated = 0;
  for (const WorkerStats& w : workers) {
    sent += w.sent;
    generated += w.generated;
  }
  return generated == 0 ? 0.0 : static_cast<double>(sent) / static_cast<double>(generated);
}

double load_balance(std::span<const std::uint64_t> expanded_per_worker) {
  if (expanded_per_worker.empty()) throw std::domain_error("load balance of zero workers");
  const auto total = std::accumulate(expanded_per_worker.begin(), expanded_per_worker.end(), std::uint64_t{0});
  if (total == 0) throw std::domain_error("load balance undefined: no worker expanded a node");
  const double mean = static_cast<double>(total) / static_cast<double>(expanded_per_worker.size());
  return static_cast<double>(*std::max_element(expanded_per_worker.begin(), expanded_per_worker.end())) / mean;
}

double speedup(double serial_wall_time, double parallel_wall_time) {
  if (parallel_wall_time <= 0.0) return kInfiniteCost;
  return serial_wall_time / parallel_wall_time;
}

OverheadReport overheads(const SearchStats& serial, std::span<const WorkerStats> workers, double parallel_wall_time) {
  OverheadReport report;
  std::uint64_t expanded = 0;
  for (const WorkerStats& w : workers) {
    report.expanded_per_worker.push_back(w.expanded);
    expanded += w.expanded;
  }
  report.search_overhead = search_overhead(expanded, serial.expanded);
  report.communication_overhead = communication_overhead(workers);
  report.load_balance = load_balance(report.expanded_per_worker);
  report.speedup = speedup(serial.wall_time, parallel_wall_time);
  return report;
}

double efficiency_fraction(std::span<const Cost> expanded_f, Cost c_star) {
  if (expanded_f.empty()) throw std::domain_error("efficiency fraction undefined: no expansions");
  const auto below = std::count_if(expanded_f.begin(), expanded_f.end(),
                                   [&](Cost f) { return f < c_star - kCostEpsilon; });
  return static_cast<double>(below) / static_cast<double>(expanded_f.size());
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

std::string csv_header() {
  return "instance,algo,strategy,p,cost,expanded,SO,CO,LB,efficiency_fraction,speedup,wall_time";
}

std::string csv_line(const CsvRow& row) {
  std::string out;
  out += row.instance + ',' + row.algorithm + ',' + row.strategy + ',' + std::to_string(row.workers) + ',';
  out += format_number(row.cost) + ',' + std::to_string(row.expanded) + ',';
  out += format_number(row.search_overhead) + ',' + format_number(row.communication_overhead) + ',';
  out += format_number(row.load_balance) + ',' + format_number(row.efficiency_fraction) + ',';
  out += format_number(row.speedup) + ',' + format_number(row.wall_time);
  return out;
}

}  // namespace parsearch
