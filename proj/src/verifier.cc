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

#include "viewex/verifier.h"

#include <set>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"

namespace viewex {
namespace {

Violation Fail(ViewConstraint c, std::string message) {
  return {c, std::move(message)};
}

std::optional<Violation> CheckGraphView(const GraphDatabase& db,
                                        const ExplanationView& view) {
  for (size_t i = 0; i < view.patterns.size(); ++i) {
    if (view.patterns[i].num_nodes() == 0) {
      return Fail(ViewConstraint::kGraphView,
                  absl::StrFormat("pattern %d is empty", i));
    }
  }
  std::set<GraphId> seen;
  for (const ExplanationSubgraph& s : view.subgraphs) {
    const GraphId id = s.source_graph;
    if (id < 0 || id >= db.size()) {
      return Fail(ViewConstraint::kGraphView,
                  absl::StrFormat("subgraph names unknown graph %d", id));
    }
    if (!seen.insert(id).second) {
      return Fail(ViewConstraint::kGraphView,
                  absl::StrFormat("graph %d has two subgraphs", id));
    }
    if (s.label != view.label) {
      return Fail(ViewConstraint::kGraphView,
                  absl::StrFormat("subgraph of graph %d has label %d, view %d",
                                  id, s.label, view.label));
    }
    const Graph& g = db.graph(id);
    for (NodeId v : s.nodes) {
      if (v < 0 || v >= g.num_nodes()) {
        return Fail(ViewConstraint::kGraphView,
                    absl::StrFormat("graph %d has no node %d", id, v));
      }
    }
    const Graph induced = InducedSubgraph(g, s.nodes);
    if (induced.topology().node_types() != s.graph.topology().node_types() ||
        induced.edges() != s.graph.edges() ||
        induced.original_ids() != s.graph.original_ids()) {
      return Fail(ViewConstraint::kGraphView,
                  absl::StrFormat("subgraph of graph %d is not induced", id));
    }
  }
  return std::nullopt;
}

std::optional<Violation> CheckExplanation(const GraphDatabase& db,
                                          const GcnModel& model,
                                          const ExplanationView& view) {
  for (const ExplanationSubgraph& s : view.subgraphs) {
    const Graph& g = db.graph(s.source_graph);
    const ClassLabel predicted = Predict(model, g);
    if (predicted != view.label) {
      return Fail(ViewConstraint::kExplanation,
                  absl::StrFormat("graph %d is labeled %d, view %d",
                                  s.source_graph, predicted, view.label));
    }
    if (!VerifyExplanation(model, g, s.nodes, view.label)) {
      return Fail(ViewConstraint::kExplanation,
                  absl::StrFormat("subgraph of graph %d is not a consistent "
                                  "and counterfactual explanation",
                                  s.source_graph));
    }
  }
  return std::nullopt;
}

std::optional<Violation> CheckCoverage(const Config& config,
                                       const ExplanationView& view) {
  const CoverageBound b = config.bounds(view.label);
  for (const ExplanationSubgraph& s : view.subgraphs) {
    const int n = static_cast<int>(s.nodes.size());
    if (n < b.lower || n > b.upper) {
      return Fail(ViewConstraint::kCoverage,
                  absl::StrFormat("subgraph of graph %d has %d nodes, "
                                  "outside [%d, %d]",
                                  s.source_graph, n, b.lower, b.upper));
    }
  }
  const CoverageReport r = MeasureCoverage(view.patterns, view.subgraphs);
  if (!r.full_node_coverage()) {
    return Fail(ViewConstraint::kCoverage,
                absl::StrFormat("patterns cover %d of %d subgraph nodes",
                                r.nodes_covered, r.nodes_total));
  }
  return std::nullopt;
}

}  // namespace

const char* ConstraintName(ViewConstraint c) {
  switch (c) {
    case ViewConstraint::kGraphView:
      return "C1";
    case ViewConstraint::kExplanation:
      return "C2";
    case ViewConstraint::kCoverage:
      return "C3";
  }
  return "?";
}

std::optional<Violation> VerifyView(const GraphDatabase& db,
                                    const GcnModel& model,
                                    const Config& config,
                                    const ExplanationView& view) {
  if (auto v = CheckGraphView(db, view)) return v;
  if (auto v = CheckExplanation(db, model, view)) return v;
  return CheckCoverage(config, view);
}

}  // namespace viewex
