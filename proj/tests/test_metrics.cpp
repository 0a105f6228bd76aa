#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "parsearch/domains/grid.hpp"
#include "parsearch/metrics/metrics.hpp"
#include "parsearch/parallel/hdastar.hpp"
#include "parsearch/serial/astar.hpp"

using namespace parsearch;

TEST(Overheads, SearchOverhead) {
  EXPECT_DOUBLE_EQ(search_overhead(150, 100), 0.5);
  EXPECT_DOUBLE_EQ(search_overhead(100, 100), 0.0);
  EXPECT_DOUBLE_EQ(search_overhead(80, 100), -0.2);
}

TEST(Overheads, CommunicationOverhead) {
  std::vector<WorkerStats> w(2);
  w[0].generated = 60;
  w[0].sent = 30;
  w[1].generated = 40;
  w[1].sent = 20;
  EXPECT_DOUBLE_EQ(communication_overhead(w), 0.5);
  EXPECT_DOUBLE_EQ(communication_overhead(std::span<const WorkerStats>{}), 0.0);
}

TEST(Overheads, LoadBalance) {
  const std::vector<std::uint64_t> even{5, 5, 5, 5}, skewed{8, 0, 0, 0};
  EXPECT_DOUBLE_EQ(load_balance(even), 1.0);
  EXPECT_DOUBLE_EQ(load_balance(skewed), 4.0);
  const std::vector<std::uint64_t> idle{0, 0};
  EXPECT_THROW(load_balance(idle), std::domain_error);
}

TEST(Overheads, Speedup) { EXPECT_DOUBLE_EQ(speedup(2.0, 0.5), 4.0); }

TEST(Overheads, Report) {
  SearchStats serial;
  serial.expanded = 100;
  serial.wall_time = 1.0;
  std::vector<WorkerStats> w(2);
  w[0].expanded = 70;
  w[0].generated = 100;
  w[0].sent = 50;
  w[1].expanded = 50;
  w[1].generated = 100;
  w[1].sent = 50;
  auto r = overheads(serial, w, 0.25);
  EXPECT_NEAR(r.search_overhead, 0.2, 1e-12);
  EXPECT_DOUBLE_EQ(r.communication_overhead, 0.5);
  EXPECT_NEAR(r.load_balance, 70.0 / 60.0, 1e-12);
  EXPECT_DOUBLE_EQ(r.speedup, 4.0);
  EXPECT_EQ(r.expanded_per_worker, (std::vector<std::uint64_t>{70, 50}));
}

TEST(Efficiency, FractionBelowOptimal) {
  const std::vector<Cost> f{1, 2, 3, 3, 3};
  EXPECT_DOUBLE_EQ(efficiency_fraction(f, 3.0), 0.4);
  EXPECT_DOUBLE_EQ(efficiency_fraction(f, 10.0), 1.0);
  EXPECT_THROW(efficiency_fraction(std::span<const Cost>{}, 1.0), std::domain_error);
}

TEST(Efficiency, SerialAStarOnOpenGrid) {
  // Octile distance is exact on an empty map, so only f = C* nodes are expanded.
  GridProblem p(std::make_shared<GridMap>(10, 10, 8), {0, 0}, {9, 6});
  std::vector<Cost> f;
  SearchOptions<Cell> options;
  options.observer = [&](const Cell&, Cost, Cost value) { f.push_back(value); };
  auto s = astar(p, options);
  EXPECT_DOUBLE_EQ(efficiency_fraction(f, s.cost), 0.0);
}

TEST(Csv, Header) {
  EXPECT_EQ(csv_header(), "instance,algo,strategy,p,cost,expanded,SO,CO,LB,efficiency_fraction,speedup,wall_time");
}

TEST(Csv, Line) {
  CsvRow row;
  row.instance = "t1";
  row.algorithm = "hdastar";
  row.strategy = "zobrist";
  row.workers = 4;
  row.cost = 22;
  row.expanded = 1000;
  row.search_overhead = 0.25;
  row.communication_overhead = 0.75;
  row.load_balance = 1.5;
  row.efficiency_fraction = 0.5;
  row.speedup = 2;
  row.wall_time = 0.125;
  EXPECT_EQ(csv_line(row), "t1,hdastar,zobrist,4,22,1000,0.25,0.75,1.5,0.5,2,0.125");
}

TEST(Csv, NumberFormatting) {
  EXPECT_EQ(format_number(kInfiniteCost), "inf");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(2 * std::sqrt(2.0)), "2.8284271247461903");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Communication, AbstractionSendsLessThanZobristOnGrids) {
  auto inst = grid_random(32, 32, 8, 0.15, 4);
  auto map = std::make_shared<GridMap>(inst.map);
  GridProblem p(map, inst.start, inst.goal);
  EngineConfig config;
  config.workers = 8;
  auto co = [&](HashKind kind) {
    HashConfig h;
    h.kind = kind;
    WorkDistribution<GridProblem> dist(p, h);
    StepsFirstSchedule schedule;
    auto r = hdastar_interleaved(p, dist, config, schedule);
    return communication_overhead(r.workers);
  };
  const double zobrist = co(HashKind::zobrist), abstraction = co(HashKind::abstraction);
  EXPECT_GT(zobrist, 0.8);
  EXPECT_LT(abstraction, zobrist);
}
