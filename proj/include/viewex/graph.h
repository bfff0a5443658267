// Copyright 2026 The Viewex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Typed undirected graphs, graph patterns and graph databases.
//
// A Topology holds node types and a deduplicated, self-loop free, undirected
// edge set with typed edges. A Graph adds a dense feature matrix (one row per
// node) and a back-map to the node ids of the graph it was cut from. A Pattern
// is a connected Topology without features.

#ifndef VIEWEX_GRAPH_H_
#define VIEWEX_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "absl/status/statusor.h"

namespace viewex {

using NodeId = int32_t;
using TypeId = int32_t;
using GraphId = int32_t;
using ClassLabel = int32_t;

// Edge type used by datasets that carry no edge labels.
inline constexpr TypeId kDefaultEdgeType = 0;

// Undirected edge, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  TypeId type = kDefaultEdgeType;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node = 0;
  TypeId edge_type = kDefaultEdgeType;
};

class Topology {
 public:
  Topology() = default;

  // Validates and normalizes the edge list: endpoints are ordered, duplicates
  // (in either direction) collapse, self-loops and conflicting duplicate edge
  // types are errors.
  static absl::StatusOr<Topology> Create(std::vector<TypeId> node_types,
                                         std::vector<Edge> edges);

  int num_nodes() const { return static_cast<int>(node_types_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  bool empty() const { return node_types_.empty(); }

  TypeId node_type(NodeId v) const { return node_types_[v]; }
  const std::vector<TypeId>& node_types() const { return node_types_; }

  // Sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  // Sorted by neighbor id.
  std::span<const Neighbor> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<TypeId> edge_type(NodeId a, NodeId b) const;
  bool has_edge(NodeId a, NodeId b) const { return edge_type(a, b).has_value(); }

  // Index of edge {a, b} in edges(), if present.
  std::optional<int> edge_index(NodeId a, NodeId b) const;

  bool IsConnected() const;

  // Connected components, each sorted, ordered by smallest member.
  std::vector<std::vector<NodeId>> ConnectedComponents() const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.node_types_ == b.node_types_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<TypeId> node_types_;
  std::vector<Edge> edges_;
  std::vector<int> offsets_ = {0};
  std::vector<Neighbor> adjacency_;
  std::vector<int> adjacency_edge_;
};

class Graph {
 public:
  Graph() = default;

  // `features` has one row per node. `original_ids` is the back-map to the
  // parent graph; empty means identity.
  static absl::StatusOr<Graph> Create(std::vector<TypeId> node_types,
                                      Eigen::MatrixXd features,
                                      std::vector<Edge> edges,
                                      std::vector<NodeId> original_ids = {});
  static absl::StatusOr<Graph> Create(Topology topology,
                                      Eigen::MatrixXd features,
                                      std::vector<NodeId> original_ids = {});

  // Empty graph with the given feature dimension.
  static Graph Empty(int feature_dim);

  const Topology& topology() const { return topology_; }
  int num_nodes() const { return topology_.num_nodes(); }
  int num_edges() const { return topology_.num_edges(); }
  bool empty() const { return topology_.empty(); }
  int feature_dim() const { return static_cast<int>(features_.cols()); }

  TypeId node_type(NodeId v) const { return topology_.node_type(v); }
  const std::vector<Edge>& edges() const { return topology_.edges(); }
  std::span<const Neighbor> neighbors(NodeId v) const {
    return topology_.neighbors(v);
  }
  int degree(NodeId v) const { return topology_.degree(v); }
  bool has_edge(NodeId a, NodeId b) const { return topology_.has_edge(a, b); }

  // n x D.
  const Eigen::MatrixXd& features() const { return features_; }

  NodeId original_id(NodeId v) const { return original_ids_[v]; }
  const std::vector<NodeId>& original_ids() const { return original_ids_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.topology_ == b.topology_ && a.features_ == b.features_ &&
           a.original_ids_ == b.original_ids_;
  }

 private:
  Topology topology_;
  Eigen::MatrixXd features_;
  std::vector<NodeId> original_ids_;
};

// Flattened minimum DFS code; equal codes <=> isomorphic typed topologies.
using CanonicalCode = std::vector<int32_t>;

class Pattern {
 public:
  Pattern() = default;

  // Fails unless the topology is connected and non-empty.
  static absl::StatusOr<Pattern> Create(Topology topology);
  static absl::StatusOr<Pattern> Create(std::vector<TypeId> node_types,
                                        std::vector<Edge> edges);
  static absl::StatusOr<Pattern> FromGraph(const Graph& g);

  // Single node of the given type.
  static Pattern Singleton(TypeId type);

  const Topology& topology() const { return topology_; }
  int num_nodes() const { return topology_.num_nodes(); }
  int num_edges() const { return topology_.num_edges(); }
  const CanonicalCode& code() const { return code_; }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return a.topology_ == b.topology_;
  }

 private:
  Topology topology_;
  CanonicalCode code_;
};

class GraphDatabase {
 public:
  GraphDatabase() = default;
  explicit GraphDatabase(std::vector<Graph> graphs)
      : graphs_(std::move(graphs)), labels_(graphs_.size()) {}

  int size() const { return static_cast<int>(graphs_.size()); }
  const Graph& graph(GraphId id) const { return graphs_[id]; }
  const std::vector<Graph>& graphs() const { return graphs_; }

  void AssignLabel(GraphId id, ClassLabel label) { labels_[id] = label; }
  std::optional<ClassLabel> assigned_label(GraphId id) const {
    return labels_[id];
  }

  // Graph ids carrying `label`, ascending.
  std::vector<GraphId> LabelGroup(ClassLabel label) const;

  // Distinct assigned labels, ascending.
  std::vector<ClassLabel> Labels() const;

 private:
  std::vector<Graph> graphs_;
  std::vector<std::optional<ClassLabel>> labels_;
};

}  // namespace viewex

#endif  // VIEWEX_GRAPH_H_
