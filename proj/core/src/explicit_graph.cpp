#include "parsearch/domains/explicit_graph.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace parsearch {

NodeId ExplicitGraph::add_node(const std::string& name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  const NodeId id{static_cast<std::uint32_t>(names_.size())};
  names_.push_back(name);
  ids_.emplace(name, id);
  adjacency_.emplace_back();
  goal_flags_.push_back(0);
  h_.push_back(0.0);
  return id;
}

void ExplicitGraph::add_edge(NodeId from, NodeId to, Cost cost) {
  if (!(cost >= 0.0) || std::isinf(cost)) throw ConfigError("edge cost must be finite and nonnegative");
  adjacency_[from.value].push_back({to, cost});
}

void ExplicitGraph::add_goal(NodeId n) { goal_flags_[n.value] = 1; }

void ExplicitGraph::set_h(NodeId n, Cost value) {
  if (!(value >= 0.0)) throw ConfigError("heuristic values must be nonnegative");
  h_[n.value] = value;
}

NodeId ExplicitGraph::find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) throw ConfigError("unknown node '" + name + "'");
  return it->second;
}

std::string ExplicitGraph::to_text() const {
  std::ostringstream out;
  out.precision(17);
  if (has_start_) out << "start " << names_[start_.value] << '\n';
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (goal_flags_[i]) out << "goal " << names_[i] << '\n';
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (h_[i] != 0.0) out << "h " << names_[i] << ' ' << h_[i] << '\n';
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (const GraphEdge& e : adjacency_[i]) out << names_[i] << ' ' << names_[e.to.value] << ' ' << e.cost << '\n';
  return out.str();
}

namespace {

Cost parse_cost(const std::string& token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !std::isfinite(value)) throw ParseError(line, "invalid number '" + token + "'");
  if (value < 0.0) throw ParseError(line, "negative value '" + token + "'");
  return value;
}

}  // namespace

ExplicitGraph graph_parse(std::string_view text) {
  ExplicitGraph graph;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  bool saw_goal = false;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty() || tokens[0][0] == '#') continue;
    if (tokens[0] == "start") {
      if (tokens.size() != 2) throw ParseError(number, "expected \"start u\"");
      if (graph.has_start()) throw ParseError(number, "duplicate start line");
      graph.set_start(graph.add_node(tokens[1]));
    } else if (tokens[0] == "goal") {
      if (tokens.size() != 2) throw ParseError(number, "expected \"goal v\"");
      graph.add_goal(graph.add_node(tokens[1]));
      saw_goal = true;
    } else if (tokens[0] == "h") {
      if (tokens.size() != 3) throw ParseError(number, "expected \"h u value\"");
      graph.set_h(graph.add_node(tokens[1]), parse_cost(tokens[2], number));
    } else {
      if (tokens.size() != 3) throw ParseError(number, "expected an edge \"u v cost\"");
      const Cost cost = parse_cost(tokens[2], number);
      const NodeId from = graph.add_node(tokens[0]);
      const NodeId to = graph.add_node(tokens[1]);
      graph.add_edge(from, to, cost);
    }
  }
  if (!graph.has_start()) throw ParseError(number + 1, "missing \"start\" line");
  if (!saw_goal) throw ParseError(number + 1, "missing \"goal\" line");
  return graph;
}

GraphProblem::GraphProblem(std::shared_ptr<const ExplicitGraph> graph) : graph_(std::move(graph)) {
  if (!graph_->has_start()) throw ConfigError("graph has no start node");
}

}  // namespace parsearch
