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

// Pairwise feature influence between nodes of a graph under a GCN.
//
// raw(v, u) is the entrywise L1 norm of d X_v^K / d X_u^0, the sensitivity of
// node v's last-layer embedding to node u's input features. Two estimators
// are provided: the realized Jacobian at the given input ("exact"), and the
// ReLU-free propagation matrix S^K ("random walk"), computed either by sparse
// products or by Monte-Carlo walks on A + I.
//
// normalized(u, v) = raw(v, u) / sum_w raw(v, w): for a fixed target v the
// normalized influences of all sources sum to one. Targets that nothing
// influences keep an all-zero column.

#ifndef VIEWEX_INFLUENCE_H_
#define VIEWEX_INFLUENCE_H_

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"

namespace viewex {

enum class InfluenceMode { kExact, kRandomWalk };

struct InfluenceOptions {
  InfluenceMode mode = InfluenceMode::kExact;
  // Random-walk mode only: 0 selects the deterministic sparse-product
  // estimator, otherwise the number of sampled walks per target node.
  int walks = 0;
  uint64_t seed = 1;

  friend bool operator==(const InfluenceOptions&,
                         const InfluenceOptions&) = default;
};

struct InfluenceTable {
  // raw(v, u): influence of source u on target v.
  Eigen::MatrixXd raw;
  // normalized(u, v); columns sum to 1 or are all zero.
  Eigen::MatrixXd normalized;
  // Last-layer node embeddings X^K.
  Eigen::MatrixXd embeddings;

  int num_nodes() const { return static_cast<int>(raw.rows()); }
};

absl::StatusOr<InfluenceTable> InfluenceExact(const GcnModel& model,
                                              const Graph& g);

// `walks` == 0 computes S^K by sparse products.
absl::StatusOr<InfluenceTable> InfluenceRandomWalk(const GcnModel& model,
                                                   const Graph& g, int walks,
                                                   uint64_t seed = 1);

absl::StatusOr<InfluenceTable> ComputeInfluence(const GcnModel& model,
                                                const Graph& g,
                                                const InfluenceOptions& options);

// Recomputes `table.normalized` columns for the given targets.
void NormalizeTargets(InfluenceTable& table, const std::vector<NodeId>& targets);

// Maintains the influence table of a graph that grows one node at a time.
// Only rows of targets within K+1 hops of the new node can change; those are
// recomputed on a local neighborhood, everything else is carried over. The
// sampled random-walk estimator is recomputed from scratch.
class InfluenceTracker {
 public:
  InfluenceTracker(const GcnModel& model, InfluenceOptions options);

  // Appends node num_nodes() with edges to already present nodes.
  absl::Status AddNode(TypeId type, const Eigen::VectorXd& features,
                       const std::vector<Neighbor>& edges);

  const Graph& graph() const { return graph_; }
  const InfluenceTable& table() const { return table_; }

 private:
  const GcnModel* model_;
  InfluenceOptions options_;
  std::vector<TypeId> types_;
  std::vector<Edge> edges_;
  Eigen::MatrixXd features_;
  Graph graph_;
  InfluenceTable table_;
};

}  // namespace viewex

#endif  // VIEWEX_INFLUENCE_H_
