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

// Greedy selection of explanation subgraphs.
//
// An explanation subgraph of G for label l is induced by a node set V_S such
// that the classifier labels G[V_S] with l and labels G \ G[V_S] otherwise.
// The greedy explainer grows V_S one node at a time, each round taking the
// node of largest marginal explainability gain among the nodes whose
// addition keeps V_S a valid explanation within the size window.

#ifndef VIEWEX_EXPLAINER_H_
#define VIEWEX_EXPLAINER_H_

#include <optional>
#include <set>
#include <vector>

#include "absl/status/statusor.h"
#include "viewex/config.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"
#include "viewex/influence.h"

namespace viewex {

struct ExplanationSubgraph {
  GraphId source_graph = 0;
  // Node ids of the source graph.
  std::set<NodeId> nodes;
  // Induced subgraph; original_ids() maps back to `nodes`.
  Graph graph;
  ClassLabel label = 0;
};

ExplanationSubgraph MakeExplanation(GraphId source, const Graph& g,
                                    std::set<NodeId> nodes, ClassLabel label);

// True iff V_S + v verifies as an explanation for `label` and fits under the
// upper size bound. `v` must not be in `selected`.
bool CanExtend(const GcnModel& model, const Graph& g, const Config& config,
               ClassLabel label, const std::set<NodeId>& selected, NodeId v);

// Greedy explanation of one graph. nullopt when no node set satisfying the
// lower size bound is found. Fails if the model does not assign `label` to g.
absl::StatusOr<std::optional<ExplanationSubgraph>> GreedyExplain(
    const GcnModel& model, const Graph& g, GraphId source,
    const Config& config, ClassLabel label, const InfluenceTable& table);

// Labels every graph with the model's prediction.
absl::Status AssignLabels(GraphDatabase& db, const GcnModel& model,
                          int workers = 1);

struct LabelExplanations {
  ClassLabel label = 0;
  std::vector<ExplanationSubgraph> subgraphs;
  // Graphs of the label group without an explanation.
  std::vector<GraphId> uncovered;
};

// Runs GreedyExplain on every graph of each requested label group. Results
// are ordered by label, then graph id, independent of `workers`.
absl::StatusOr<std::vector<LabelExplanations>> ExplainDatabase(
    const GraphDatabase& db, const GcnModel& model, const Config& config,
    const std::vector<ClassLabel>& labels, int workers = 1);

}  // namespace viewex

#endif  // VIEWEX_EXPLAINER_H_
