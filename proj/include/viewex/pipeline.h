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

// Builds one explanation view per class label, with either the batch greedy
// explainer followed by pattern summarization, or the streaming explainer
// whose per-graph pattern caches are merged.

#ifndef VIEWEX_PIPELINE_H_
#define VIEWEX_PIPELINE_H_

#include <vector>

#include "absl/status/statusor.h"
#include "viewex/config.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"
#include "viewex/summarizer.h"

namespace viewex {

enum class Algorithm { kApprox, kStream };

struct ViewBuild {
  // One view per requested label, in request order.
  std::vector<ExplanationView> views;
  // uncovered[i]: graphs of views[i]'s label group without an explanation.
  std::vector<std::vector<GraphId>> uncovered;
};

// `db` must carry assigned labels. An empty `labels` means every label
// present in the database.
absl::StatusOr<ViewBuild> BuildViews(const GraphDatabase& db,
                                     const GcnModel& model,
                                     const Config& config,
                                     std::vector<ClassLabel> labels,
                                     Algorithm algorithm, int workers = 1);

}  // namespace viewex

#endif  // VIEWEX_PIPELINE_H_
