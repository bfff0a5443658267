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

#include "viewex/influence.h"

#include <cmath>
#include <queue>
#include <random>
#include <set>
#include <utility>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"

namespace viewex {
namespace {

// Nodes within `radius` hops of `source`, ascending.
std::vector<NodeId> Ball(const Topology& t, NodeId source, int radius) {
  std::vector<int> dist(t.num_nodes(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    if (dist[v] == radius) continue;
    for (const Neighbor& nb : t.neighbors(v)) {
      if (dist[nb.node] < 0) {
        dist[nb.node] = dist[v] + 1;
        frontier.push(nb.node);
      }
    }
  }
  std::vector<NodeId> ball;
  for (NodeId v = 0; v < t.num_nodes(); ++v) {
    if (dist[v] >= 0) ball.push_back(v);
  }
  return ball;
}

std::vector<double> InverseSqrtDegrees(const Topology& t) {
  std::vector<double> inv(t.num_nodes());
  for (NodeId v = 0; v < t.num_nodes(); ++v) {
    inv[v] = 1.0 / std::sqrt(t.degree(v) + 1.0);
  }
  return inv;
}

// Row `source` of S^steps, propagated node by node in ascending id order.
// The arithmetic only touches nodes within `steps` hops of `source`, which
// makes the result independent of anything outside that neighborhood.
Eigen::VectorXd PropagationRow(const Topology& t,
                               const std::vector<double>& inv_sqrt,
                               NodeId source, int steps) {
  Eigen::VectorXd row = Eigen::VectorXd::Zero(t.num_nodes());
  row[source] = 1.0;
  Eigen::VectorXd next(t.num_nodes());
  for (int step = 0; step < steps; ++step) {
    next.setZero();
    for (NodeId x = 0; x < t.num_nodes(); ++x) {
      const double r = row[x];
      if (r == 0.0) continue;
      next[x] += r * inv_sqrt[x] * inv_sqrt[x];
      for (const Neighbor& nb : t.neighbors(x)) {
        next[nb.node] += r * inv_sqrt[x] * inv_sqrt[nb.node];
      }
    }
    std::swap(row, next);
  }
  return row;
}

InfluenceTable FinishTable(Eigen::MatrixXd raw, Eigen::MatrixXd embeddings) {
  InfluenceTable table;
  const int n = static_cast<int>(raw.rows());
  table.raw = std::move(raw);
  table.embeddings = std::move(embeddings);
  table.normalized = Eigen::MatrixXd::Zero(n, n);
  std::vector<NodeId> all(n);
  for (NodeId v = 0; v < n; ++v) all[v] = v;
  NormalizeTargets(table, all);
  return table;
}

}  // namespace

void NormalizeTargets(InfluenceTable& table,
                      const std::vector<NodeId>& targets) {
  for (NodeId v : targets) {
    const double total = table.raw.row(v).sum();
    if (total > 0.0) {
      table.normalized.col(v) = table.raw.row(v).transpose() / total;
    } else {
      table.normalized.col(v).setZero();
    }
  }
}

absl::StatusOr<InfluenceTable> InfluenceExact(const GcnModel& model,
                                              const Graph& g) {
  absl::StatusOr<InferenceResult> fwd = Forward(model, g);
  if (!fwd.ok()) return fwd.status();
  const int n = g.num_nodes();
  const int in_dim = model.feature_dim();
  const Eigen::SparseMatrix<double> s = NormalizedAdjacency(g.topology());
  std::vector<Eigen::MatrixXd> masks;
  for (const Eigen::MatrixXd& z : fwd->pre_activations) {
    masks.push_back((z.array() > 0.0).cast<double>().matrix());
  }

  // Forward-mode differentiation: one tangent per input coordinate (u, a).
  Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd tangent;
  for (NodeId u = 0; u < n; ++u) {
    for (int a = 0; a < in_dim; ++a) {
      tangent = Eigen::MatrixXd::Zero(n, in_dim);
      tangent(u, a) = 1.0;
      for (int k = 0; k < model.num_layers(); ++k) {
        tangent = masks[k].cwiseProduct(s * (tangent * model.layers()[k]));
      }
      raw.col(u) += tangent.cwiseAbs().rowwise().sum();
    }
  }
  return FinishTable(std::move(raw), fwd->embeddings.back());
}

absl::StatusOr<InfluenceTable> InfluenceRandomWalk(const GcnModel& model,
                                                   const Graph& g, int walks,
                                                   uint64_t seed) {
  if (walks < 0) {
    return absl::InvalidArgumentError("walk count must be non-negative");
  }
  absl::StatusOr<InferenceResult> fwd = Forward(model, g);
  if (!fwd.ok()) return fwd.status();
  const Topology& t = g.topology();
  const int n = t.num_nodes();
  const int steps = model.num_layers();
  const std::vector<double> inv_sqrt = InverseSqrtDegrees(t);
  Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(n, n);
  if (walks == 0) {
    for (NodeId v = 0; v < n; ++v) {
      raw.row(v) = PropagationRow(t, inv_sqrt, v, steps).transpose();
    }
  } else {
    // A walk on A + I from v ends at u with probability (D^-1 (A+I))^K(v,u);
    // S^K(v,u) is that probability times sqrt(deg(v) / deg(u)).
    std::mt19937_64 rng(seed);
    for (NodeId v = 0; v < n; ++v) {
      Eigen::VectorXd hits = Eigen::VectorXd::Zero(n);
      for (int w = 0; w < walks; ++w) {
        NodeId at = v;
        for (int step = 0; step < steps; ++step) {
          std::uniform_int_distribution<int> pick(0, t.degree(at));
          const int choice = pick(rng);
          if (choice < t.degree(at)) at = t.neighbors(at)[choice].node;
        }
        hits[at] += 1.0;
      }
      for (NodeId u = 0; u < n; ++u) {
        raw(v, u) = hits[u] / walks * inv_sqrt[u] / inv_sqrt[v];
      }
    }
  }
  return FinishTable(std::move(raw), fwd->embeddings.back());
}

absl::StatusOr<InfluenceTable> ComputeInfluence(
    const GcnModel& model, const Graph& g, const InfluenceOptions& options) {
  switch (options.mode) {
    case InfluenceMode::kExact:
      return InfluenceExact(model, g);
    case InfluenceMode::kRandomWalk:
      return InfluenceRandomWalk(model, g, options.walks, options.seed);
  }
  return absl::InternalError("unknown influence mode");
}

InfluenceTracker::InfluenceTracker(const GcnModel& model,
                                   InfluenceOptions options)
    : model_(&model),
      options_(options),
      features_(0, model.feature_dim()),
      graph_(Graph::Empty(model.feature_dim())) {
  table_.raw.resize(0, 0);
  table_.normalized.resize(0, 0);
  table_.embeddings.resize(0, model.embedding_dim());
}

absl::Status InfluenceTracker::AddNode(TypeId type,
                                       const Eigen::VectorXd& features,
                                       const std::vector<Neighbor>& edges) {
  const NodeId v = static_cast<NodeId>(types_.size());
  if (features.size() != model_->feature_dim()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("node %d has %d features, model expects %d", v,
                        features.size(), model_->feature_dim()));
  }
  for (const Neighbor& nb : edges) {
    if (nb.node < 0 || nb.node >= v) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "node %d links to %d, which has not arrived yet", v, nb.node));
    }
  }
  std::vector<Edge> all_edges = edges_;
  for (const Neighbor& nb : edges) all_edges.push_back({nb.node, v, nb.edge_type});
  std::vector<TypeId> types = types_;
  types.push_back(type);
  Eigen::MatrixXd all_features(v + 1, model_->feature_dim());
  all_features.topRows(v) = features_;
  all_features.row(v) = features.transpose();
  absl::StatusOr<Graph> grown = Graph::Create(types, all_features, all_edges);
  if (!grown.ok()) return grown.status();

  types_ = std::move(types);
  edges_ = std::move(grown->edges());
  features_ = std::move(all_features);
  graph_ = *std::move(grown);

  if (options_.mode == InfluenceMode::kRandomWalk && options_.walks > 0) {
    absl::StatusOr<InfluenceTable> table =
        InfluenceRandomWalk(*model_, graph_, options_.walks, options_.seed);
    if (!table.ok()) return table.status();
    table_ = *std::move(table);
    return absl::OkStatus();
  }

  const int depth = model_->num_layers();
  const std::vector<NodeId> affected = Ball(graph_.topology(), v, depth + 1);
  const std::vector<NodeId> region = Ball(graph_.topology(), v, 2 * depth + 2);
  const Graph local =
      InducedSubgraph(graph_, std::set<NodeId>(region.begin(), region.end()));
  absl::StatusOr<InfluenceTable> local_table =
      ComputeInfluence(*model_, local, options_);
  if (!local_table.ok()) return local_table.status();

  const int n = v + 1;
  InfluenceTable next;
  next.raw = Eigen::MatrixXd::Zero(n, n);
  next.raw.topLeftCorner(v, v) = table_.raw;
  next.normalized = Eigen::MatrixXd::Zero(n, n);
  next.normalized.topLeftCorner(v, v) = table_.normalized;
  next.embeddings.resize(n, model_->embedding_dim());
  next.embeddings.topRows(v) = table_.embeddings;

  std::vector<int> local_index(n, -1);
  for (size_t i = 0; i < region.size(); ++i) local_index[region[i]] = i;
  for (NodeId a : affected) {
    const int la = local_index[a];
    next.raw.row(a).setZero();
    for (size_t j = 0; j < region.size(); ++j) {
      next.raw(a, region[j]) = local_table->raw(la, j);
    }
    next.embeddings.row(a) = local_table->embeddings.row(la);
  }
  NormalizeTargets(next, affected);
  table_ = std::move(next);
  return absl::OkStatus();
}

}  // namespace viewex
