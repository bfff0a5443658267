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

#include "viewex/explainer.h"

#include <utility>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"
#include "viewex/parallel.h"
#include "viewex/scoring.h"

namespace viewex {
namespace {

// Candidate of largest gain; ties go to the smallest id.
std::optional<NodeId> BestCandidate(const ScoreState& state,
                                    const std::vector<NodeId>& candidates) {
  std::optional<NodeId> best;
  double best_gain = 0.0;
  for (NodeId v : candidates) {
    const double gain = state.Gain(v);
    if (!best.has_value() || gain > best_gain) {
      best = v;
      best_gain = gain;
    }
  }
  return best;
}

}  // namespace

ExplanationSubgraph MakeExplanation(GraphId source, const Graph& g,
                                    std::set<NodeId> nodes, ClassLabel label) {
  ExplanationSubgraph s;
  s.source_graph = source;
  s.graph = InducedSubgraph(g, nodes);
  s.nodes = std::move(nodes);
  s.label = label;
  return s;
}

bool CanExtend(const GcnModel& model, const Graph& g, const Config& config,
               ClassLabel label, const std::set<NodeId>& selected, NodeId v) {
  if (static_cast<int>(selected.size()) + 1 > config.bounds(label).upper) {
    return false;
  }
  std::set<NodeId> grown = selected;
  grown.insert(v);
  return VerifyExplanation(model, g, grown, label);
}

absl::StatusOr<std::optional<ExplanationSubgraph>> GreedyExplain(
    const GcnModel& model, const Graph& g, GraphId source,
    const Config& config, ClassLabel label, const InfluenceTable& table) {
  absl::StatusOr<InferenceResult> fwd = Forward(model, g);
  if (!fwd.ok()) return fwd.status();
  if (fwd->label != label) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "graph %d is classified %d, not %d", source, fwd->label, label));
  }
  const CoverageBound bounds = config.bounds(label);
  const ObjectiveIndex index(table, config);
  ScoreState state(index);
  std::set<NodeId> reservoir;

  // Explanation phase: candidates are re-verified against the current V_S
  // every round.
  while (static_cast<int>(state.selected().size()) < bounds.upper) {
    std::vector<NodeId> candidates;
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      if (state.selected().contains(v)) continue;
      if (CanExtend(model, g, config, label, state.selected(), v)) {
        candidates.push_back(v);
      }
    }
    const std::optional<NodeId> pick = BestCandidate(state, candidates);
    if (!pick.has_value()) break;
    reservoir.insert(candidates.begin(), candidates.end());
    state.Add(*pick);
  }

  // Lower-bound phase: draw from earlier candidates that still verify.
  while (static_cast<int>(state.selected().size()) < bounds.lower) {
    std::vector<NodeId> candidates;
    for (NodeId v : reservoir) {
      if (state.selected().contains(v)) continue;
      if (CanExtend(model, g, config, label, state.selected(), v)) {
        candidates.push_back(v);
      }
    }
    const std::optional<NodeId> pick = BestCandidate(state, candidates);
    if (!pick.has_value()) return std::nullopt;
    state.Add(*pick);
  }

  if (state.selected().empty()) return std::nullopt;
  return MakeExplanation(source, g, state.selected(), label);
}

absl::Status AssignLabels(GraphDatabase& db, const GcnModel& model,
                          int workers) {
  std::vector<absl::StatusOr<InferenceResult>> results(
      db.size(), absl::UnknownError("not run"));
  ParallelFor(db.size(), workers,
              [&](int i) { results[i] = Forward(model, db.graph(i)); });
  for (GraphId i = 0; i < db.size(); ++i) {
    if (!results[i].ok()) return results[i].status();
    db.AssignLabel(i, results[i]->label);
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<LabelExplanations>> ExplainDatabase(
    const GraphDatabase& db, const GcnModel& model, const Config& config,
    const std::vector<ClassLabel>& labels, int workers) {
  struct Job {
    ClassLabel label;
    GraphId graph;
  };
  std::vector<Job> jobs;
  for (ClassLabel l : labels) {
    for (GraphId id : db.LabelGroup(l)) jobs.push_back({l, id});
  }
  using Outcome = absl::StatusOr<std::optional<ExplanationSubgraph>>;
  std::vector<Outcome> outcomes(jobs.size(), absl::UnknownError("not run"));
  ParallelFor(static_cast<int>(jobs.size()), workers, [&](int i) {
    const Graph& g = db.graph(jobs[i].graph);
    absl::StatusOr<InfluenceTable> table =
        ComputeInfluence(model, g, config.influence);
    if (!table.ok()) {
      outcomes[i] = table.status();
      return;
    }
    outcomes[i] = GreedyExplain(model, g, jobs[i].graph, config,
                                jobs[i].label, *table);
  });

  std::vector<LabelExplanations> out;
  size_t next = 0;
  for (ClassLabel l : labels) {
    LabelExplanations group;
    group.label = l;
    for (; next < jobs.size() && jobs[next].label == l; ++next) {
      if (!outcomes[next].ok()) return outcomes[next].status();
      if (outcomes[next]->has_value()) {
        group.subgraphs.push_back(**std::move(outcomes[next]));
      } else {
        group.uncovered.push_back(jobs[next].graph);
      }
    }
    out.push_back(std::move(group));
  }
  return out;
}

}  // namespace viewex
