#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "parsearch/domains/explicit_graph.hpp"
#include "parsearch/domains/grid.hpp"
#include "parsearch/domains/tile.hpp"
#include "parsearch/serial/astar.hpp"
#include "parsearch/serial/idastar.hpp"

using namespace parsearch;

namespace {

TilePuzzle eight(std::uint64_t seed) { return TilePuzzle(tile_random_solvable(3, seed)); }

GraphProblem graph(const char* text) { return GraphProblem(std::make_shared<ExplicitGraph>(graph_parse(text))); }

}  // namespace

TEST(AStar, InitialGoal) {
  TilePuzzle p(tile_goal(3));
  auto s = astar(p);
  EXPECT_EQ(s.cost, 0.0);
  ASSERT_EQ(s.path.size(), 1u);
  EXPECT_EQ(s.stats.expanded, 1u);
}

TEST(AStar, MissorderGraph) {
  GraphProblem p(oracle::missorder_graph());
  auto s = astar(p);
  EXPECT_EQ(s.cost, 2.0);
  ASSERT_EQ(s.path.size(), 3u);
  EXPECT_EQ(p.graph().name(s.path[1]), "b");
}

TEST(AStar, MatchesBfsOnEightPuzzle) {
  const auto& bfs = oracle::EightPuzzleBfs::instance();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TilePuzzle p = eight(seed);
    auto s = astar(p);
    EXPECT_EQ(s.cost, bfs.distance(p.initial()));
    EXPECT_EQ(s.stats.reopened, 0u);
    auto c = validate_path(p, s.path);
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, s.cost);
  }
}

// Frozen from the BFS oracle.
TEST(AStar, KnownEightPuzzleCosts) {
  EXPECT_EQ(astar(eight(7)).cost, 16.0);
  EXPECT_EQ(astar(eight(1)).cost, oracle::EightPuzzleBfs::instance().distance(eight(1).initial()));
}

TEST(AStar, ReopensUnderInconsistentHeuristic) {
  // h(c) is admissible but overestimates the edge a->c.
  GraphProblem p = graph("start s\ngoal g\nh a 4\ns a 1\ns b 3\nb a 1\na g 5\n");
  auto s = astar(p);
  EXPECT_EQ(s.cost, 6.0);
  GraphProblem q = graph("start s\ngoal g\nh b 0\nh a 5\ns a 1\ns b 1\nb c 1\nc a 0\na g 10\nh c 0\n");
  auto t = astar(q);
  EXPECT_EQ(t.cost, oracle::dijkstra(q));
}

TEST(AStar, ReopeningIsExercised) {
  // h(a) is admissible but inconsistent, so c is closed via b before the
  // cheaper route through a is seen.
  GraphProblem p = graph(
      "start s\ngoal g\n"
      "s a 1\ns b 1\na c 1\nb c 3\nc g 10\n"
      "h a 10\n");
  auto s = astar(p);
  EXPECT_EQ(s.cost, 12.0);
  EXPECT_GE(s.stats.reopened, 1u);
}

TEST(AStar, UnsolvableGivesInfinity) {
  GraphProblem p = graph("start a\ngoal z\na b 1\nb a 1\nz z 0\n");
  auto s = astar(p);
  EXPECT_TRUE(std::isinf(s.cost));
  EXPECT_TRUE(s.path.empty());
  EXPECT_EQ(s.status, SearchStatus::unsolvable);
}

TEST(AStar, NodeLimit) {
  SearchOptions<TileState> options;
  options.node_limit = 50;
  EXPECT_THROW(astar(TilePuzzle(tile_random_solvable(4, 3)), options), NodeLimitExceeded);
}

TEST(AStar, NeverExpandsAboveOptimal) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TilePuzzle p = eight(seed);
    const Cost c_star = oracle::EightPuzzleBfs::instance().distance(p.initial());
    SearchOptions<TileState> options;
    Cost worst = 0;
    options.observer = [&](const TileState&, Cost, Cost f) { worst = std::max(worst, f); };
    astar(p, options);
    EXPECT_LE(worst, c_star + 1e-9);
  }
}

TEST(AStar, TieBreakPrefersLargerG) {
  // Two goals reachable with equal f; the deeper node is expanded first.
  GraphProblem p = graph("start s\ngoal g\ns a 1\ns b 0\nh a 1\nh b 2\na g 1\nb g 2\n");
  std::vector<std::string> order;
  SearchOptions<NodeId> options;
  options.observer = [&](NodeId n, Cost, Cost) { order.push_back(p.graph().name(n)); };
  astar(p, options);
  ASSERT_GE(order.size(), 2u);
  EXPECT_EQ(order[1], "a");
}

TEST(AStar, DeterministicExpansionOrder) {
  auto trace = [](const TilePuzzle& p) {
    std::string t;
    SearchOptions<TileState> options;
    options.observer = [&](const TileState& s, Cost, Cost) { t += tile_to_string(s); };
    astar(p, options);
    return t;
  };
  EXPECT_EQ(trace(eight(11)), trace(eight(11)));
}

TEST(UniformCost, AgreesWithAStar) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) EXPECT_EQ(uniform_cost_oracle(eight(seed)).cost, astar(eight(seed)).cost);
  GraphProblem p(oracle::random_graph(60, 200, 3, true));
  EXPECT_EQ(uniform_cost_oracle(p).cost, astar(p).cost);
}

TEST(UniformCost, EmptyGridCorner) {
  GridProblem p(std::make_shared<GridMap>(3, 3, 8), {0, 0}, {2, 2});
  EXPECT_NEAR(uniform_cost_oracle(p).cost, 2 * std::sqrt(2.0), 1e-12);
}

TEST(UniformCost, Unsolvable) {
  auto map = std::make_shared<GridMap>(grid_parse("3 3 8\n.#.\n##.\n...\n"));
  EXPECT_TRUE(std::isinf(uniform_cost_oracle(GridProblem(map, {0, 0}, {2, 2})).cost));
}

TEST(IdaStar, InitialGoalIsOneIteration) {
  auto s = idastar(TilePuzzle(tile_goal(3)));
  EXPECT_EQ(s.cost, 0.0);
  EXPECT_EQ(s.stats.iteration_expanded.size(), 1u);
}

TEST(IdaStar, MatchesAStar) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TilePuzzle p = eight(seed);
    // Every node with f < C* is expanded by both; IDA* may get lucky on f = C*.
    std::uint64_t below = 0;
    SearchOptions<TileState> options;
    Cost c_star = astar(p).cost;
    options.observer = [&](const TileState&, Cost, Cost f) { below += f < c_star - 1e-9; };
    astar(p, options);
    auto i = idastar(p);
    EXPECT_EQ(i.cost, c_star);
    EXPECT_GE(i.stats.expanded, below);
    EXPECT_EQ(*validate_path(p, i.path), i.cost);
  }
}

TEST(IdaStar, BoundsRiseToNextPrunedF) {
  GraphProblem p = graph("start s\ngoal g\ns a 2\ns b 5\na g 7\nb g 1\n");
  auto s = idastar(p);
  EXPECT_EQ(s.cost, 6.0);
  // Bounds 0, 2, 5, 6 -> four iterations.
  EXPECT_EQ(s.stats.iteration_expanded.size(), 4u);
}

TEST(IdaStar, UnsolvableFiniteSpace) {
  EXPECT_TRUE(std::isinf(idastar(graph("start a\ngoal z\na b 1\nb c 1\nc a 1\nz z 1\n")).cost));
}

TEST(WAStar, WeightOneEqualsAStar) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) EXPECT_EQ(wastar(eight(seed), 1.0).cost, astar(eight(seed)).cost);
}

TEST(WAStar, BoundedSuboptimality) {
  const auto& bfs = oracle::EightPuzzleBfs::instance();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TilePuzzle p = eight(seed);
    auto s = wastar(p, 2.0);
    EXPECT_LE(s.cost, 2.0 * bfs.distance(p.initial()) + 1e-9);
    EXPECT_EQ(*validate_path(p, s.path), s.cost);
  }
}

TEST(WAStar, GreedyReturnsValidPath) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TilePuzzle p = eight(seed);
    auto s = wastar(p, kInfiniteCost);
    ASSERT_TRUE(s.solved());
    EXPECT_EQ(*validate_path(p, s.path), s.cost);
  }
}

TEST(WAStar, RejectsWeightBelowOne) { EXPECT_THROW(wastar(eight(1), 0.5), ConfigError); }

TEST(ValidatePath, RejectsBrokenPaths) {
  TilePuzzle p = eight(4);
  auto s = astar(p);
  auto broken = s.path;
  std::swap(broken[1], broken[2]);
  EXPECT_FALSE(validate_path(p, broken).has_value());
  EXPECT_FALSE(validate_path(p, {}).has_value());
}
