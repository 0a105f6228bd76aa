#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "parsearch/common.hpp"
#include "parsearch/parallel/engine.hpp"
#include "parsearch/serial/solution.hpp"

namespace parsearch {

// Parallel overheads of one run measured against the serial A* baseline on
// the same instance:
//   SO = expanded_parallel / expanded_serial - 1
//   CO = triplets sent to another worker / nodes generated
//   LB = max per-worker expanded / mean per-worker expanded
//   speedup = serial wall time / parallel wall time
struct OverheadReport {
  double search_overhead = 0.0;
  double communication_overhead = 0.0;
  double load_balance = 1.0;
  double speedup = 0.0;
  std::vector<std::uint64_t> expanded_per_worker;
};

double search_overhead(std::uint64_t parallel_expanded, std::uint64_t serial_expanded);
double communication_overhead(std::span<const WorkerStats> workers);
/// Throws std::domain_error when no worker expanded anything.
double load_balance(std::span<const std::uint64_t> expanded_per_worker);
double speedup(double serial_wall_time, double parallel_wall_time);

OverheadReport overheads(const SearchStats& serial, std::span<const WorkerStats> workers, double parallel_wall_time);

/// Share of expansions whose f lies strictly below c_star. Throws
/// std::domain_error for an empty list.
double efficiency_fraction(std::span<const Cost> expanded_f, Cost c_star);

// One line of the benchmark CSV.
struct CsvRow {
  std::string instance;
  std::string algorithm;
  std::string strategy;
  std::uint32_t workers = 1;
  Cost cost = kInfiniteCost;
  std::uint64_t expanded = 0;
  double search_overhead = 0.0;
  double communication_overhead = 0.0;
  double load_balance = 1.0;
  double efficiency_fraction = 0.0;
  double speedup = 0.0;
  double wall_time = 0.0;
};

std::string csv_header();
std::string csv_line(const CsvRow& row);
/// Shortest decimal that reads back to the same double; "inf" for infinity.
std::string format_number(double value);

}  // namespace parsearch
