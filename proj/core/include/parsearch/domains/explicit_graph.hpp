#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "parsearch/common.hpp"

namespace parsearch {

struct NodeId {
  std::uint32_t value = 0;

  friend bool operator==(const NodeId&, const NodeId&) = default;
};

struct GraphEdge {
  NodeId to;
  Cost cost;
};

class ExplicitGraph {
 public:
  /// Returns the id for `name`, creating the node on first use.
  NodeId add_node(const std::string& name);
  void add_edge(NodeId from, NodeId to, Cost cost);
  void set_start(NodeId n) { start_ = n; has_start_ = true; }
  void add_goal(NodeId n);
  void set_h(NodeId n, Cost value);

  std::size_t node_count() const { return names_.size(); }
  bool has_start() const { return has_start_; }
  NodeId start() const { return start_; }
  bool is_goal(NodeId n) const { return goal_flags_[n.value] != 0; }
  const std::vector<GraphEdge>& edges(NodeId n) const { return adjacency_[n.value]; }
  Cost h(NodeId n) const { return h_[n.value]; }
  const std::string& name(NodeId n) const { return names_[n.value]; }
  NodeId find(const std::string& name) const;

  std::string to_text() const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::vector<GraphEdge>> adjacency_;
  std::vector<std::uint8_t> goal_flags_;
  std::vector<Cost> h_;
  NodeId start_;
  bool has_start_ = false;
};

/// Line format: "start u", "goal v", "h u value", or an edge "u v cost".
/// Blank lines and lines starting with '#' are ignored.
ExplicitGraph graph_parse(std::string_view text);

class GraphProblem {
 public:
  using State = NodeId;

  explicit GraphProblem(std::shared_ptr<const ExplicitGraph> graph);

  const ExplicitGraph& graph() const { return *graph_; }
  NodeId initial() const { return graph_->start(); }
  bool is_goal(NodeId n) const { return graph_->is_goal(n); }
  void expand(NodeId n, std::vector<Successor<NodeId>>& out) const {
    for (const GraphEdge& e : graph_->edges(n)) out.push_back({e.to, e.cost});
  }
  Cost h(NodeId n) const { return graph_->h(n); }
  void features(NodeId n, std::vector<FeatureId>& out) const { out.push_back(n.value); }
  std::size_t feature_count() const { return graph_->node_count(); }
  void append_canonical(NodeId n, std::string& out) const {
    out.append(reinterpret_cast<const char*>(&n.value), sizeof(n.value));
  }

 private:
  std::shared_ptr<const ExplicitGraph> graph_;
};

}  // namespace parsearch

template <>
struct std::hash<parsearch::NodeId> {
  std::size_t operator()(const parsearch::NodeId& n) const noexcept {
    return static_cast<std::size_t>(parsearch::mix64(n.value));
  }
};
