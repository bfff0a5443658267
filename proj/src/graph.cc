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

#include "viewex/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"

namespace viewex {

absl::StatusOr<Topology> Topology::Create(std::vector<TypeId> node_types,
                                          std::vector<Edge> edges) {
  const int n = static_cast<int>(node_types.size());
  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "edge (%d, %d) references a node outside [0, %d)", e.u, e.v, n));
    }
    if (e.u == e.v) {
      return absl::InvalidArgumentError(
          absl::StrFormat("self-loop on node %d", e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> unique;
  unique.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!unique.empty() && unique.back().u == e.u && unique.back().v == e.v) {
      if (unique.back().type != e.type) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "edge (%d, %d) listed with types %d and %d", e.u, e.v,
            unique.back().type, e.type));
      }
      continue;
    }
    unique.push_back(e);
  }

  Topology t;
  t.node_types_ = std::move(node_types);
  t.edges_ = std::move(unique);
  std::vector<int> degree(n, 0);
  for (const Edge& e : t.edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  t.offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) t.offsets_[v + 1] = t.offsets_[v] + degree[v];
  t.adjacency_.resize(t.offsets_[n]);
  t.adjacency_edge_.resize(t.offsets_[n]);
  std::vector<int> cursor(t.offsets_.begin(), t.offsets_.end() - 1);
  // Edges are sorted by (u, v), so filling in edge order keeps each adjacency
  // list sorted for the u side; the v side is sorted afterwards.
  for (int i = 0; i < t.num_edges(); ++i) {
    const Edge& e = t.edges_[i];
    t.adjacency_[cursor[e.u]] = {e.v, e.type};
    t.adjacency_edge_[cursor[e.u]++] = i;
    t.adjacency_[cursor[e.v]] = {e.u, e.type};
    t.adjacency_edge_[cursor[e.v]++] = i;
  }
  for (int v = 0; v < n; ++v) {
    const int begin = t.offsets_[v];
    const int end = t.offsets_[v + 1];
    std::vector<int> order(end - begin);
    std::iota(order.begin(), order.end(), begin);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      return t.adjacency_[a].node < t.adjacency_[b].node;
    });
    std::vector<Neighbor> adj;
    std::vector<int> adj_edge;
    for (int i : order) {
      adj.push_back(t.adjacency_[i]);
      adj_edge.push_back(t.adjacency_edge_[i]);
    }
    std::copy(adj.begin(), adj.end(), t.adjacency_.begin() + begin);
    std::copy(adj_edge.begin(), adj_edge.end(),
              t.adjacency_edge_.begin() + begin);
  }
  return t;
}

std::optional<int> Topology::edge_index(NodeId a, NodeId b) const {
  if (a < 0 || b < 0 || a >= num_nodes() || b >= num_nodes()) {
    return std::nullopt;
  }
  if (degree(a) > degree(b)) std::swap(a, b);
  const auto adj = neighbors(a);
  const auto it = std::lower_bound(
      adj.begin(), adj.end(), b,
      [](const Neighbor& n, NodeId id) { return n.node < id; });
  if (it == adj.end() || it->node != b) return std::nullopt;
  return adjacency_edge_[offsets_[a] + (it - adj.begin())];
}

std::optional<TypeId> Topology::edge_type(NodeId a, NodeId b) const {
  const std::optional<int> index = edge_index(a, b);
  if (!index.has_value()) return std::nullopt;
  return edges_[*index].type;
}

std::vector<std::vector<NodeId>> Topology::ConnectedComponents() const {
  std::vector<std::vector<NodeId>> components;
  std::vector<bool> seen(num_nodes(), false);
  for (NodeId start = 0; start < num_nodes(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> component;
    std::queue<NodeId> frontier;
    frontier.push(start);
    seen[start] = true;
    while (!frontier.empty()) {
      const NodeId v = frontier.front();
      frontier.pop();
      component.push_back(v);
      for (const Neighbor& n : neighbors(v)) {
        if (!seen[n.node]) {
          seen[n.node] = true;
          frontier.push(n.node);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool Topology::IsConnected() const {
  return num_nodes() > 0 && ConnectedComponents().size() == 1;
}

absl::StatusOr<Graph> Graph::Create(std::vector<TypeId> node_types,
                                    Eigen::MatrixXd features,
                                    std::vector<Edge> edges,
                                    std::vector<NodeId> original_ids) {
  absl::StatusOr<Topology> topology =
      Topology::Create(std::move(node_types), std::move(edges));
  if (!topology.ok()) return topology.status();
  return Create(*std::move(topology), std::move(features),
                std::move(original_ids));
}

absl::StatusOr<Graph> Graph::Create(Topology topology,
                                    Eigen::MatrixXd features,
                                    std::vector<NodeId> original_ids) {
  if (features.rows() != topology.num_nodes()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("feature matrix has %d rows for %d nodes",
                        features.rows(), topology.num_nodes()));
  }
  if (!features.allFinite()) {
    return absl::InvalidArgumentError("non-finite node feature");
  }
  if (original_ids.empty()) {
    original_ids.resize(topology.num_nodes());
    std::iota(original_ids.begin(), original_ids.end(), 0);
  } else if (static_cast<int>(original_ids.size()) != topology.num_nodes()) {
    return absl::InvalidArgumentError("original id map has the wrong size");
  }
  Graph g;
  g.topology_ = std::move(topology);
  g.features_ = std::move(features);
  g.original_ids_ = std::move(original_ids);
  return g;
}

Graph Graph::Empty(int feature_dim) {
  Graph g;
  g.features_.resize(0, feature_dim);
  return g;
}

absl::StatusOr<Pattern> Pattern::Create(Topology topology) {
  if (!topology.IsConnected()) {
    return absl::InvalidArgumentError(
        "a pattern must be connected and non-empty");
  }
  Pattern p;
  p.code_ = ComputeCanonicalCode(topology);
  p.topology_ = std::move(topology);
  return p;
}

absl::StatusOr<Pattern> Pattern::Create(std::vector<TypeId> node_types,
                                        std::vector<Edge> edges) {
  absl::StatusOr<Topology> topology =
      Topology::Create(std::move(node_types), std::move(edges));
  if (!topology.ok()) return topology.status();
  return Create(*std::move(topology));
}

absl::StatusOr<Pattern> Pattern::FromGraph(const Graph& g) {
  return Create(g.topology());
}

Pattern Pattern::Singleton(TypeId type) {
  return *Create(std::vector<TypeId>{type}, {});
}

std::vector<GraphId> GraphDatabase::LabelGroup(ClassLabel label) const {
  std::vector<GraphId> group;
  for (GraphId id = 0; id < size(); ++id) {
    if (labels_[id] == label) group.push_back(id);
  }
  return group;
}

std::vector<ClassLabel> GraphDatabase::Labels() const {
  std::set<ClassLabel> labels;
  for (const auto& l : labels_) {
    if (l.has_value()) labels.insert(*l);
  }
  return {labels.begin(), labels.end()};
}

}  // namespace viewex
