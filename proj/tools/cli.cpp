#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "parsearch/allocation/allocation.hpp"
#include "parsearch/hashing/distribution.hpp"
#include "parsearch/metrics/metrics.hpp"
#include "parsearch/parallel/dovetail.hpp"
#include "parsearch/parallel/hdastar.hpp"
#include "parsearch/parallel/parallel_window.hpp"
#include "parsearch/parallel/spastar.hpp"
#include "parsearch/serial/astar.hpp"
#include "parsearch/serial/idastar.hpp"

namespace parsearch::cli {
namespace {

constexpr const char* kRecordHelp = R"(Run record (solve, JSON, schema parsearch.run/1):
  schema, algorithm, strategy, p, batch, seed, termination, detection_rounds,
  status (solved|unsolvable|cancelled), cost (number, or "inf" when unsolvable),
  path_length, path_valid, expanded, generated, reopened, duplicates,
  wall_time (seconds), audit_ok, winning_weight (dovetail),
  provisional_solutions (window), workers: [{id, expanded, generated, sent,
  received, messages_sent, messages_received, reopened, duplicates, stored}].
Bench CSV (schema 1): instance, algo, strategy, p, cost, expanded, SO, CO, LB,
  efficiency_fraction, speedup, wall_time. SO = expanded / serial expanded - 1,
  CO = triplets sent to another worker / generated, LB = max / mean per-worker
  expanded, efficiency_fraction = share of expansions with f < C*, speedup =
  serial wall time / wall time. efficiency_fraction is nan for algorithms that
  do not report expansions one by one (window, dovetail).
IA CSV (schema 1): W_plus, b, model, total_cost, optimal_cost, ratio, after
  '#' lines carrying the analytic bounds and the sweep summary.
Exit codes: 0 solved, 1 unsolvable, 2 node limit, 3 usage error.
Environment: PARSEARCH_SEED replaces the default seed of 42.)";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

template <class T>
T number(const std::map<std::string, std::string>& kv, const std::string& key, T fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  try {
    std::size_t used = 0;
    T value;
    if constexpr (std::is_floating_point_v<T>) {
      value = static_cast<T>(std::stod(it->second, &used));
    } else {
      value = static_cast<T>(std::stoll(it->second, &used));
    }
    if (used != it->second.size()) throw std::invalid_argument(key);
    return value;
  } catch (const std::logic_error&) {
    throw UsageError("invalid value '" + it->second + "' for " + key);
  }
}

Cell parse_cell(const std::string& text, Cell fallback) {
  if (text.empty()) return fallback;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("cells are written x,y, got '" + text + "'");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("cells are written x,y, got '" + text + "'");
  }
}

void require_keys(const std::map<std::string, std::string>& kv, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : kv) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw UsageError("unknown generator key '" + key + "'");
  }
}

HashConfig hash_config_for(const RunSpec& spec) {
  HashConfig config;
  if (!spec.hash_config.empty()) config = parse_hash_config(read_file(spec.hash_config));
  config.kind = parse_hash_kind(spec.hash);
  config.seed = spec.seed;
  if (!spec.hyperplane_d.empty()) config.hyperplane_d = Thickness::parse(spec.hyperplane_d);
  return config;
}

EngineConfig engine_config_for(const RunSpec& spec) {
  EngineConfig config;
  config.workers = spec.workers;
  config.batch_size = spec.batch;
  config.seed = spec.seed;
  config.node_limit = spec.node_limit;
  config.termination = parse_termination_mode(spec.termination);
  config.validate();
  return config;
}

template <class State>
void take_parallel(RunOutcome& o, ParallelResult<State>&& r) {
  o.status = r.solution.status;
  o.cost = r.solution.cost;
  o.stats = r.solution.stats;
  o.worker_stats = std::move(r.workers);
  o.detection_rounds = r.detection_rounds;
  o.termination = r.termination;
  o.audit_ok = r.audit.ok();
  o.wall_time = r.wall_time;
}

template <SearchProblem P>
RunOutcome execute_on(const P& problem, const RunSpec& spec, bool collect_f) {
  using State = StateOf<P>;
  RunOutcome o;
  o.algorithm = spec.algorithm;
  o.strategy = "-";
  o.workers = spec.workers;
  const EngineConfig engine = engine_config_for(spec);

  std::vector<std::vector<Cost>> f_per_worker(std::max<std::size_t>(spec.workers, 1));
  ExpansionObserver<State> serial_observer;
  WorkerObserver<State> worker_observer;
  if (collect_f) {
    serial_observer = [&](const State&, Cost, Cost f) { f_per_worker[0].push_back(f); };
    worker_observer = [&](WorkerId w, const State&, Cost, Cost f) { f_per_worker[w].push_back(f); };
  }
  std::vector<State> path;

  const std::string& algo = spec.algorithm;
  if (algo == "astar" || algo == "ucs" || algo == "idastar" || algo == "wastar") {
    SearchOptions<State> options;
    options.node_limit = spec.node_limit;
    options.observer = serial_observer;
    Solution<State> s = algo == "astar"     ? astar(problem, options)
                        : algo == "ucs"     ? uniform_cost_oracle(problem, options)
                        : algo == "idastar" ? idastar(problem, options)
                                            : wastar(problem, spec.weight, options);
    o.workers = 1;
    o.status = s.status;
    o.cost = s.cost;
    o.stats = s.stats;
    o.wall_time = s.stats.wall_time;
    WorkerStats w;
    w.expanded = s.stats.expanded;
    w.generated = s.stats.generated;
    w.reopened = s.stats.reopened;
    w.duplicates = s.stats.duplicates;
    o.worker_stats = {w};
    if (algo == "wastar") o.winning_weight = spec.weight;
    path = std::move(s.path);
  } else if (algo == "hdastar") {
    const HashConfig config = hash_config_for(spec);
    o.strategy = std::string(hash_kind_name(config.kind));
    o.decentralized = true;
    WorkDistribution<P> distribution(problem, config);
    ParallelResult<State> r;
    if (spec.deterministic) {
      RandomSchedule schedule(spec.seed, spec.delivery_bias);
      r = hdastar_interleaved(problem, distribution, engine, schedule, worker_observer);
    } else {
      r = hdastar(problem, distribution, engine, worker_observer);
    }
    path = r.solution.path;
    take_parallel(o, std::move(r));
  } else if (algo == "spastar") {
    auto r = spec.deterministic ? spastar_lockstep(problem, engine, worker_observer)
                                : spastar(problem, engine, worker_observer);
    path = r.solution.path;
    take_parallel(o, std::move(r));
  } else if (algo == "window") {
    auto r = parallel_window(problem, engine);
    o.provisional_solutions = r.provisional_solutions;
    path = r.run.solution.path;
    take_parallel(o, std::move(r.run));
  } else if (algo == "dovetail") {
    const std::vector<Cost> weights = spec.weights.empty() ? default_dovetail_weights() : spec.weights;
    auto r = dovetail(problem, weights, spec.node_limit);
    o.workers = static_cast<std::uint32_t>(weights.size());
    if (r.solution.solved()) o.winning_weight = r.winning_weight;
    path = r.solution.path;
    take_parallel(o, std::move(r));
  } else {
    throw UsageError("unknown algorithm '" + algo + "'");
  }

  o.path_length = path.size();
  o.path_valid = o.status != SearchStatus::solved || validate_path(problem, path).has_value();
  for (auto& fs : f_per_worker) o.expanded_f.insert(o.expanded_f.end(), fs.begin(), fs.end());
  return o;
}

nlohmann::json cost_json(Cost c) { return std::isinf(c) ? nlohmann::json("inf") : nlohmann::json(c); }

std::string status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::solved: return "solved";
    case SearchStatus::unsolvable: return "unsolvable";
    case SearchStatus::cancelled: return "cancelled";
  }
  return "unknown";
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PARSEARCH_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::logic_error&) {
      throw UsageError(std::string("PARSEARCH_SEED is not a number: '") + env + "'");
    }
  }
  return 42;
}

int cmd_solve(RunSpec spec, std::ostream& out) {
  AnyProblem problem = load_problem(spec);
  RunOutcome outcome = execute(problem, spec);
  const std::string record = run_record(outcome, spec).dump(2) + "\n";
  if (spec.out.empty()) {
    out << record;
  } else {
    write_output(spec.out, record, out);
    out << "cost " << format_number(outcome.cost) << " expanded " << outcome.stats.expanded << " generated "
        << outcome.stats.generated << " wall_time " << outcome.wall_time << "\n";
  }
  return outcome.status == SearchStatus::solved ? kSolved : kUnsolvable;
}

// Suite file (JSON):
//   {"instances": [{"name": "t1", "domain": "tile", "gen": "n=3,seed=1"},
//                  {"name": "g1", "domain": "grid", "path": "maps/g1.map", "start": "0,0", "goal": "9,9"}],
//    "algorithms": ["hdastar", "spastar"], "strategies": ["zobrist"], "workers": [1, 2, 4],
//    "batch": 0, "termination": "two-wave", "seed": 42, "node_limit": 10000000,
//    "weights": [1, 2, "inf"], "execution": "deterministic" | "threaded"}
// Serial A* always runs first per instance and is the baseline for the
// overhead columns. Parallel algorithms skip p = 1, which is the baseline.
int cmd_bench(const std::string& suite_path, const std::string& out_path, std::uint64_t seed, std::ostream& out) {
  nlohmann::json suite;
  try {
    suite = nlohmann::json::parse(read_file(suite_path));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("suite is not valid JSON: " + std::string(e.what()));
  }
  try {
    if (!suite.contains("instances") || !suite["instances"].is_array() || suite["instances"].empty())
      throw UsageError("suite lists no instances");

    RunSpec base;
    base.seed = suite.value("seed", seed);
    base.batch = suite.value("batch", 0u);
    base.termination = suite.value("termination", std::string("two-wave"));
    base.node_limit = suite.value("node_limit", kDefaultNodeLimit);
    const std::string execution = suite.value("execution", std::string("deterministic"));
    if (execution != "deterministic" && execution != "threaded")
      throw UsageError("execution must be deterministic or threaded");
    base.deterministic = execution == "deterministic";
    if (suite.contains("weights")) {
      for (const auto& w : suite["weights"])
        base.weights.push_back(w.is_string() ? parse_weights(w.get<std::string>()).at(0) : w.get<double>());
    }
    const auto algorithms = suite.value("algorithms", std::vector<std::string>{"hdastar"});
    const auto strategies = suite.value("strategies", std::vector<std::string>{"zobrist"});
    const auto workers = suite.value("workers", std::vector<std::uint32_t>{1, 2, 4});
    for (const auto& s : strategies) parse_hash_kind(s);
    parse_termination_mode(base.termination);

    // Parse everything before running anything.
    std::vector<std::pair<std::string, AnyProblem>> problems;
    for (const auto& entry : suite["instances"]) {
      RunSpec spec = base;
      spec.domain = entry.at("domain").get<std::string>();
      spec.instance = entry.value("path", std::string());
      spec.gen = entry.value("gen", std::string());
      spec.start = entry.value("start", std::string());
      spec.goal = entry.value("goal", std::string());
      const std::string name = entry.value("name", spec.instance.empty() ? spec.gen : spec.instance);
      problems.emplace_back(name, load_problem(spec));
    }

    std::string csv = "# parsearch bench schema " + std::to_string(kCsvSchemaVersion) + "\n" + csv_header() + "\n";
    for (const auto& [name, problem] : problems) {
      RunSpec serial = base;
      serial.algorithm = "astar";
      const RunOutcome baseline = execute(problem, serial, true);
      auto emit = [&](const RunOutcome& r) {
        CsvRow row;
        row.instance = name;
        row.algorithm = r.algorithm;
        row.strategy = r.strategy;
        row.workers = r.workers;
        row.cost = r.cost;
        row.expanded = r.stats.expanded;
        const OverheadReport report = overheads(baseline.stats, r.worker_stats, r.wall_time);
        row.search_overhead = report.search_overhead;
        row.communication_overhead = report.communication_overhead;
        row.load_balance = report.load_balance;
        row.efficiency_fraction = r.expanded_f.empty() ? std::nan("") : efficiency_fraction(r.expanded_f, baseline.cost);
        row.speedup = report.speedup;
        row.wall_time = r.wall_time;
        csv += csv_line(row) + "\n";
      };
      emit(baseline);
      for (const auto& algo : algorithms) {
        RunSpec spec = base;
        spec.algorithm = algo;
        if (algo == "astar") continue;
        if (algo == "hdastar") {
          for (const auto& strategy : strategies)
            for (auto p : workers) {
              if (p == 1) continue;
              spec.hash = strategy;
              spec.workers = p;
              emit(execute(problem, spec, true));
            }
        } else if (algo == "spastar" || algo == "window") {
          for (auto p : workers) {
            if (p == 1) continue;
            spec.workers = p;
            emit(execute(problem, spec, true));
          }
        } else {
          emit(execute(problem, spec, true));
        }
      }
    }
    write_output(out_path, csv, out);
    return kSolved;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("malformed suite: " + std::string(e.what()));
  }
}

int cmd_iasim(double b, std::uint64_t w_max, const std::string& model_name, double failing_time, bool reuse,
              const std::string& out_path, std::ostream& out) {
  if (!(b > 1.0)) throw UsageError("--b must exceed 1");
  if (w_max < 1) throw UsageError("--wmax must be at least 1");
  CostModel model;
  model.kind = parse_cost_model(model_name);
  model.spare_time_reuse = reuse;
  const RatioBounds bounds = ratio_bounds(b);
  const SweepSummary sweep = ia_sweep(b, w_max, model, failing_time);
  std::string text = "# parsearch iasim schema " + std::to_string(kCsvSchemaVersion) + "\n";
  text += "# b=" + format_number(b) + " model=" + std::string(cost_model_name(model.kind)) +
          " E=" + format_number(failing_time) + " spare_time_reuse=" + (reuse ? "1" : "0") + "\n";
  text += "# bounds worst=" + format_number(bounds.worst) + " average=" + format_number(bounds.average) + "\n";
  text += "# summary max_ratio=" + format_number(sweep.max_ratio) + " mean_ratio=" + format_number(sweep.mean_ratio) +
          " expected_cost_ratio=" + format_number(sweep.expected_cost_ratio) + "\n";
  text += "W_plus,b,model,total_cost,optimal_cost,ratio\n";
  for (const SweepRow& r : sweep.rows) {
    text += std::to_string(r.w_plus) + ',' + format_number(r.b) + ',' + std::string(cost_model_name(r.model)) + ',' +
            format_number(r.total_cost) + ',' + format_number(r.optimal_cost) + ',' + format_number(r.ratio) + "\n";
  }
  write_output(out_path, text, out);
  return kSolved;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& spec) {
  std::map<std::string, std::string> kv;
  std::stringstream stream(spec);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw UsageError("expected key=value in '" + spec + "', got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

std::vector<Cost> parse_weights(const std::string& text) {
  std::vector<Cost> weights;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item == "inf" || item == "infinity") {
      weights.push_back(kInfiniteCost);
      continue;
    }
    try {
      std::size_t used = 0;
      weights.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("invalid weight '" + item + "'");
    }
  }
  if (weights.empty()) throw UsageError("no weights given");
  return weights;
}

TileState parse_tile_instance(const std::string& text) {
  std::istringstream in(text);
  int width = 0;
  if (!(in >> width) || width < 2 || width > kMaxTileWidth) throw UsageError("tile instance must start with a width in 2..5");
  std::vector<int> cells;
  int v = 0;
  while (in >> v) cells.push_back(v);
  if (!in.eof()) throw UsageError("tile instance contains a non-number");
  if (cells.size() != static_cast<std::size_t>(width * width))
    throw UsageError("tile instance needs " + std::to_string(width * width) + " cells, got " + std::to_string(cells.size()));
  try {
    return tile_from_permutation(width, cells);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

AnyProblem load_problem(const RunSpec& spec) {
  if (spec.instance.empty() == spec.gen.empty()) throw UsageError("give exactly one of --instance and --gen");
  try {
    const auto kv = parse_key_values(spec.gen);
    if (spec.domain == "tile") {
      if (!spec.instance.empty()) return TilePuzzle(parse_tile_instance(read_file(spec.instance)));
      require_keys(kv, {"n", "seed", "walk"});
      const int n = number<int>(kv, "n", 3);
      if (n < 2 || n > kMaxTileWidth) throw UsageError("tile width must be in 2..5");
      const auto seed = number<std::uint64_t>(kv, "seed", spec.seed);
      if (kv.count("walk")) return TilePuzzle(tile_random_walk(n, number<int>(kv, "walk", 0), seed));
      return TilePuzzle(tile_random_solvable(n, seed));
    }
    if (spec.domain == "grid") {
      if (!spec.instance.empty()) {
        auto map = std::make_shared<GridMap>(grid_parse(read_file(spec.instance)));
        const Cell start = parse_cell(spec.start, {0, 0});
        const Cell goal = parse_cell(spec.goal, {map->width() - 1, map->height() - 1});
        return GridProblem(map, start, goal);
      }
      require_keys(kv, {"w", "h", "conn", "density", "seed"});
      auto instance = grid_random(number<int>(kv, "w", 16), number<int>(kv, "h", 16), number<int>(kv, "conn", 8),
                                  number<double>(kv, "density", 0.2), number<std::uint64_t>(kv, "seed", spec.seed));
      auto map = std::make_shared<GridMap>(std::move(instance.map));
      return GridProblem(map, parse_cell(spec.start, instance.start), parse_cell(spec.goal, instance.goal));
    }
    if (spec.domain == "graph") {
      if (spec.instance.empty()) throw UsageError("graph instances are read from --instance files");
      return GraphProblem(std::make_shared<ExplicitGraph>(graph_parse(read_file(spec.instance))));
    }
    if (spec.domain == "lattice") {
      if (!spec.instance.empty()) throw UsageError("lattice instances are generated with --gen");
      require_keys(kv, {"dims", "len", "seed", "uniform"});
      const int dims = number<int>(kv, "dims", 3);
      const int len = number<int>(kv, "len", 6);
      if (number<int>(kv, "uniform", 0) != 0) return LatticeProblem::uniform(dims, len);
      return LatticeProblem::random(dims, len, number<std::uint64_t>(kv, "seed", spec.seed));
    }
  } catch (const ParseError& e) {
    throw UsageError(spec.instance + ": " + e.what());
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
  throw UsageError("unknown domain '" + spec.domain + "' (expected tile, grid, graph or lattice)");
}

RunOutcome execute(const AnyProblem& problem, const RunSpec& spec, bool collect_f) {
  try {
    return std::visit([&](const auto& p) { return execute_on(p, spec, collect_f); }, problem);
  } catch (const ConfigError& e) {
    throw UsageError(e.what());
  }
}

nlohmann::json run_record(const RunOutcome& o, const RunSpec& spec) {
  nlohmann::json j;
  j["schema"] = kRunSchema;
  j["algorithm"] = o.algorithm;
  j["strategy"] = o.strategy;
  j["p"] = o.workers;
  j["batch"] = spec.batch;
  j["seed"] = spec.seed;
  j["termination"] = o.decentralized ? std::string(termination_mode_name(o.termination)) : std::string("-");
  j["detection_rounds"] = o.detection_rounds;
  j["status"] = status_name(o.status);
  j["cost"] = cost_json(o.cost);
  j["path_length"] = o.path_length;
  j["path_valid"] = o.path_valid;
  j["expanded"] = o.stats.expanded;
  j["generated"] = o.stats.generated;
  j["reopened"] = o.stats.reopened;
  j["duplicates"] = o.stats.duplicates;
  j["wall_time"] = o.wall_time;
  j["audit_ok"] = o.audit_ok;
  if (o.winning_weight) j["winning_weight"] = cost_json(*o.winning_weight);
  if (o.algorithm == "window") j["provisional_solutions"] = o.provisional_solutions;
  j["workers"] = nlohmann::json::array();
  for (std::size_t i = 0; i < o.worker_stats.size(); ++i) {
    const WorkerStats& w = o.worker_stats[i];
    j["workers"].push_back({{"id", i},
                            {"expanded", w.expanded},
                            {"generated", w.generated},
                            {"sent", w.sent},
                            {"received", w.received},
                            {"messages_sent", w.messages_sent},
                            {"messages_received", w.messages_received},
                            {"reopened", w.reopened},
                            {"duplicates", w.duplicates},
                            {"stored", w.stored}});
  }
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Parallel optimal state-space search: solve instances, run benchmark sweeps, simulate iterative allocation."};
  app.footer(kRecordHelp);
  app.require_subcommand(1);

  RunSpec spec;
  std::string weights;
  auto* solve = app.add_subcommand("solve", "Solve one instance and print its run record (JSON)");
  solve->add_option("--domain", spec.domain, "tile | grid | graph | lattice")->required();
  solve->add_option("--instance", spec.instance, "Instance file");
  solve->add_option("--gen", spec.gen,
                    "Generator spec. tile: n,seed[,walk]; grid: w,h,conn,density,seed; lattice: dims,len,seed[,uniform]");
  solve->add_option("--start", spec.start, "Grid start cell x,y");
  solve->add_option("--goal", spec.goal, "Grid goal cell x,y");
  solve->add_option("--algo", spec.algorithm, "astar | ucs | idastar | wastar | spastar | hdastar | window | dovetail")
      ->capture_default_str();
  solve->add_option("--hash", spec.hash, "zobrist | azh | mult | abstraction | hyperplane | random")
      ->capture_default_str();
  solve->add_option("--hash-config", spec.hash_config, "File of 'key = value' hash settings");
  solve->add_option("--hyperplane-d", spec.hyperplane_d, "Hyperplane thickness d, whole or 1/m");
  solve->add_option("--workers,-p", spec.workers, "Worker count")->capture_default_str();
  solve->add_option("--batch", spec.batch, "Triplets per message (0: 10 below 16 workers, else 100)")
      ->capture_default_str();
  solve->add_option("--weight", spec.weight, "wastar weight")->capture_default_str();
  solve->add_option("--weights", weights, "dovetail weights, comma separated (default 1,1.5,2,3,inf)");
  solve->add_option("--termination", spec.termination, "two-wave | time")->capture_default_str();
  solve->add_option("--node-limit", spec.node_limit, "Stored nodes per search (per worker)")->capture_default_str();
  auto* seed_option = solve->add_option("--seed", spec.seed, "Seed for hashing, ownership and generators");
  solve->add_flag("--deterministic", spec.deterministic,
                  "hdastar on the seeded single-threaded interleaver, spastar in lock step");
  solve->add_option("--delivery-bias", spec.delivery_bias, "Interleaver: chance of delivering before stepping")
      ->capture_default_str();
  solve->add_option("--out", spec.out, "Write the run record here instead of stdout");

  std::string suite_path, bench_out;
  std::uint64_t bench_seed = 0;
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite (JSON) and emit one CSV row per run");
  bench->add_option("suite", suite_path, "Suite file")->required();
  bench->add_option("--out", bench_out, "CSV destination (default stdout)");
  auto* bench_seed_option = bench->add_option("--seed", bench_seed, "Default seed when the suite sets none");

  double b = 2.0, failing_time = 1.0;
  std::uint64_t w_max = 1024;
  std::string model = "discrete", ia_out;
  bool no_reuse = false;
  auto* iasim = app.add_subcommand("iasim", "Iterative allocation cost simulation over W_plus = 1..wmax");
  iasim->add_option("--b", b, "Geometric base (> 1)")->capture_default_str();
  iasim->add_option("--wmax", w_max, "Largest minimal width simulated")->capture_default_str();
  iasim->add_option("--model", model, "discrete | continuous")->capture_default_str();
  iasim->add_option("--failing-time,-E", failing_time, "Hours a failing iteration runs")->capture_default_str();
  iasim->add_flag("--no-spare-reuse", no_reuse, "Bill every discrete iteration on its own");
  iasim->add_option("--out", ia_out, "CSV destination (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (solve->parsed()) {
      if (seed_option->count() == 0) spec.seed = default_seed();
      if (!weights.empty()) spec.weights = parse_weights(weights);
      return cmd_solve(spec, out);
    }
    if (bench->parsed()) {
      if (bench_seed_option->count() == 0) bench_seed = default_seed();
      return cmd_bench(suite_path, bench_out, bench_seed, out);
    }
    return cmd_iasim(b, w_max, model, failing_time, !no_reuse, ia_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const NodeLimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kResourceLimit;
  }
}

}  // namespace parsearch::cli
