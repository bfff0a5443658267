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

// Quality measures of explanation views.
//
// For a graph G with label l and explanation node set V_s:
//   fidelity+ = Pr(M(G) = l) - Pr(M(G minus V_s) = l)
//   fidelity- = Pr(M(G) = l) - Pr(M(G[V_s]) = l)
//   sparsity  = 1 - (|V_s| + |E_s|) / (|V| + |E|)
// Probabilities are softmax outputs; removing nodes drops their edges.
// Dataset values average over graphs that have an explanation. Compression
// compares the pattern tier against the subgraph tier, counting each
// distinct pattern once:
//   compression = 1 - (|V_P| + |E_P|) / (|V_S| + |E_S|)

#ifndef VIEWEX_METRICS_H_
#define VIEWEX_METRICS_H_

#include <cstdint>
#include <set>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"
#include "viewex/summarizer.h"

namespace viewex {

double FidelityPlus(const GcnModel& model, const Graph& g,
                    const std::set<NodeId>& nodes, ClassLabel label);
double FidelityMinus(const GcnModel& model, const Graph& g,
                     const std::set<NodeId>& nodes, ClassLabel label);
double Sparsity(const Graph& g, const std::set<NodeId>& nodes);

double Compression(std::span<const ExplanationView> views);
// Percentage of subgraph edges that no pattern match covers.
double EdgeLossPct(std::span<const ExplanationView> views);

// Mean fidelity+ of `samples` uniformly random node sets of `size` nodes.
double RandomFidelityPlus(const GcnModel& model, const Graph& g,
                          ClassLabel label, int size, int samples,
                          uint64_t seed);

struct GraphMetrics {
  GraphId graph = 0;
  ClassLabel label = 0;
  int nodes = 0;
  double fidelity_plus = 0.0;
  double fidelity_minus = 0.0;
  double sparsity = 0.0;
  // Mean fidelity+ of random node sets of the same size; 0 when no samples
  // were requested.
  double random_fidelity_plus = 0.0;
};

struct MetricsReport {
  double fidelity_plus = 0.0;
  double fidelity_minus = 0.0;
  double sparsity = 0.0;
  double compression = 0.0;
  double edge_loss_pct = 0.0;
  double random_fidelity_plus = 0.0;
  int baseline_samples = 0;
  // Ordered by graph id.
  std::vector<GraphMetrics> per_graph;
  // Graphs without an explanation; excluded from the averages.
  std::vector<GraphId> excluded;
};

// With baseline_samples > 0, graph g is also scored against that many random
// node sets of its explanation size, drawn with seed + g.
absl::StatusOr<MetricsReport> EvaluateViews(
    const GraphDatabase& db, std::span<const ExplanationView> views,
    const GcnModel& model, int workers = 1, int baseline_samples = 0,
    uint64_t seed = 1);

}  // namespace viewex

#endif  // VIEWEX_METRICS_H_
