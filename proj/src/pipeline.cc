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

#include "viewex/pipeline.h"

#include <map>

#include "viewex/explainer.h"
#include "viewex/parallel.h"
#include "viewex/streamer.h"

namespace viewex {
namespace {

absl::StatusOr<ViewBuild> BuildApprox(const GraphDatabase& db,
                                      const GcnModel& model,
                                      const Config& config,
                                      const std::vector<ClassLabel>& labels,
                                      int workers) {
  absl::StatusOr<std::vector<LabelExplanations>> groups =
      ExplainDatabase(db, model, config, labels, workers);
  if (!groups.ok()) return groups.status();
  ViewBuild out;
  for (LabelExplanations& group : *groups) {
    absl::StatusOr<ExplanationView> view =
        Summarize(group.label, std::move(group.subgraphs), config);
    if (!view.ok()) return view.status();
    out.views.push_back(*std::move(view));
    out.uncovered.push_back(std::move(group.uncovered));
  }
  return out;
}

absl::StatusOr<ViewBuild> BuildStream(const GraphDatabase& db,
                                      const GcnModel& model,
                                      const Config& config,
                                      const std::vector<ClassLabel>& labels,
                                      int workers) {
  struct Job {
    ClassLabel label;
    GraphId graph;
  };
  std::vector<Job> jobs;
  for (ClassLabel l : labels) {
    for (GraphId id : db.LabelGroup(l)) jobs.push_back({l, id});
  }
  using Outcome = absl::StatusOr<std::optional<StreamResult>>;
  std::vector<Outcome> outcomes(jobs.size(), absl::UnknownError("not run"));
  ParallelFor(static_cast<int>(jobs.size()), workers, [&](int i) {
    outcomes[i] = StreamGraph(model, db.graph(jobs[i].graph), jobs[i].graph,
                              config, jobs[i].label);
  });

  ViewBuild out;
  size_t next = 0;
  for (ClassLabel l : labels) {
    ExplanationView view;
    view.label = l;
    std::vector<GraphId> uncovered;
    std::map<CanonicalCode, Pattern> patterns;
    for (; next < jobs.size() && jobs[next].label == l; ++next) {
      if (!outcomes[next].ok()) return outcomes[next].status();
      if (!outcomes[next]->has_value()) {
        uncovered.push_back(jobs[next].graph);
        continue;
      }
      StreamResult& r = **outcomes[next];
      for (Pattern& p : r.patterns) patterns.emplace(p.code(), std::move(p));
      view.subgraphs.push_back(std::move(r.subgraph));
    }
    for (auto& [code, p] : patterns) view.patterns.push_back(std::move(p));
    view.coverage = MeasureCoverage(view.patterns, view.subgraphs);
    out.views.push_back(std::move(view));
    out.uncovered.push_back(std::move(uncovered));
  }
  return out;
}

}  // namespace

absl::StatusOr<ViewBuild> BuildViews(const GraphDatabase& db,
                                     const GcnModel& model,
                                     const Config& config,
                                     std::vector<ClassLabel> labels,
                                     Algorithm algorithm, int workers) {
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  if (labels.empty()) labels = db.Labels();
  for (GraphId id = 0; id < db.size(); ++id) {
    if (!db.assigned_label(id).has_value()) {
      return absl::FailedPreconditionError("database labels are not assigned");
    }
  }
  if (algorithm == Algorithm::kApprox) {
    return BuildApprox(db, model, config, labels, workers);
  }
  return BuildStream(db, model, config, labels, workers);
}

}  // namespace viewex
