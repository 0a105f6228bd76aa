#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "parsearch/domains/explicit_graph.hpp"
#include "parsearch/domains/grid.hpp"
#include "parsearch/domains/lattice.hpp"
#include "parsearch/domains/tile.hpp"
#include "parsearch/parallel/engine.hpp"
#include "parsearch/termination/termination.hpp"

namespace parsearch::cli {

enum ExitCode : int { kSolved = 0, kUnsolvable = 1, kResourceLimit = 2, kUsage = 3 };

inline constexpr const char* kRunSchema = "parsearch.run/1";
inline constexpr int kCsvSchemaVersion = 1;

/// Bad flags, files or instance text: exit code 3.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyProblem = std::variant<TilePuzzle, GridProblem, GraphProblem, LatticeProblem>;

struct RunSpec {
  std::string domain;
  std::string instance;  // path, or empty when `gen` is used
  std::string gen;       // generator spec, e.g. "n=3,seed=7"
  std::string start;     // grid only, "x,y"
  std::string goal;
  std::string algorithm = "astar";
  std::string hash = "zobrist";
  std::string hash_config;  // path to "key = value" overrides
  std::string hyperplane_d;
  std::uint32_t workers = 1;
  std::uint32_t batch = 0;
  Cost weight = 2.0;
  std::vector<Cost> weights;
  std::string termination = "two-wave";
  std::size_t node_limit = kDefaultNodeLimit;
  std::uint64_t seed = 42;
  // Run hdastar on the deterministic interleaver and spastar in lock step.
  bool deterministic = false;
  double delivery_bias = 0.5;
  std::string out;
};

/// "a=1,b=x" -> {a: 1, b: x}. Throws UsageError on malformed input.
std::map<std::string, std::string> parse_key_values(const std::string& spec);

/// Comma separated weights; "inf" is accepted.
std::vector<Cost> parse_weights(const std::string& text);

/// Width followed by the n*n cells in row-major order, whitespace separated.
TileState parse_tile_instance(const std::string& text);

AnyProblem load_problem(const RunSpec& spec);

struct RunOutcome {
  std::string algorithm;
  std::string strategy;
  std::uint32_t workers = 1;
  SearchStatus status = SearchStatus::unsolvable;
  Cost cost = kInfiniteCost;
  std::size_t path_length = 0;
  bool path_valid = false;
  SearchStats stats;
  std::vector<WorkerStats> worker_stats;
  bool decentralized = false;
  TerminationMode termination = TerminationMode::two_wave;
  std::uint64_t detection_rounds = 0;
  bool audit_ok = true;
  std::optional<Cost> winning_weight;
  std::uint64_t provisional_solutions = 0;
  double wall_time = 0.0;
  // f of every expansion, when requested.
  std::vector<Cost> expanded_f;
};

/// Runs one algorithm on one problem. Throws UsageError for bad settings and
/// NodeLimitExceeded when the run outgrows its node limit.
RunOutcome execute(const AnyProblem& problem, const RunSpec& spec, bool collect_f = false);

nlohmann::json run_record(const RunOutcome& outcome, const RunSpec& spec);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parsearch::cli
