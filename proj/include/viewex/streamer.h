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

// One-pass explanation of a graph that arrives node by node.
//
// Every arriving node brings its edges to earlier nodes. The explainer keeps
// a bounded node cache V_S (at most u_l nodes), the reservoir V_u of all
// nodes seen so far, and a pattern cache P_c covering the subgraph induced by
// V_S. A node joins V_S while there is room and the grown set still
// verifies; once the cache is full it may replace the cached node of least
// loss, but only when its gain is at least twice that node's gain.
// Finish() completes a copy of the state to a view at any point.

#ifndef VIEWEX_STREAMER_H_
#define VIEWEX_STREAMER_H_

#include <optional>
#include <set>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "viewex/config.h"
#include "viewex/explainer.h"
#include "viewex/gcn.h"
#include "viewex/influence.h"
#include "viewex/summarizer.h"

namespace viewex {

// What the last Step did with the arriving node.
enum class StreamDecision {
  kRejected,  // The node cannot extend the current explanation.
  kAdded,     // Room in the cache.
  kSkipped,   // Cache full, node covered or brings no new pattern.
  kKept,      // Cache full, swap not worth it.
  kSwapped,   // Replaced a cached node.
};

struct StreamResult {
  ExplanationSubgraph subgraph;
  // Patterns of the cache with at least one match in the subgraph.
  std::vector<Pattern> patterns;
};

class StreamExplainer {
 public:
  StreamExplainer(const GcnModel& model, const Config& config,
                  ClassLabel label, GraphId source = 0);

  // `v` must be the next node id; `edges` may only reach earlier nodes.
  absl::Status Step(NodeId v, TypeId type, const Eigen::VectorXd& features,
                    const std::vector<Neighbor>& edges);

  // Completes a copy of the current state: V_S is extended from the
  // reservoir until it verifies and meets the lower size bound. nullopt when
  // that is impossible.
  std::optional<StreamResult> Finish() const;

  const std::set<NodeId>& selected() const { return selected_; }
  const std::set<NodeId>& reservoir() const { return reservoir_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  const Graph& graph() const { return tracker_.graph(); }
  const InfluenceTable& table() const { return tracker_.table(); }
  StreamDecision last_decision() const { return last_decision_; }
  // f(V_S + v) - f(V_S) of the last arriving node, before any update.
  double last_gain() const { return last_gain_; }
  // f(V_S) on the current prefix.
  double Value() const;

  // Node cache maintenance for a node that can extend V_S.
  void UpdateNodeCache(NodeId v);
  // Keeps P_c covering the subgraph induced by V_S.
  void UpdatePatterns();

  void SetCacheForTesting(std::set<NodeId> selected,
                          std::vector<Pattern> patterns) {
    selected_ = std::move(selected);
    patterns_ = std::move(patterns);
  }

 private:
  bool Verifies(const std::set<NodeId>& nodes) const;
  bool CoveredByCache(NodeId v) const;
  bool BringsNewPattern(NodeId v) const;

  const GcnModel* model_;
  Config config_;
  ClassLabel label_;
  GraphId source_;
  InfluenceTracker tracker_;
  std::set<NodeId> selected_;
  std::set<NodeId> reservoir_;
  std::vector<Pattern> patterns_;
  StreamDecision last_decision_ = StreamDecision::kRejected;
  double last_gain_ = 0.0;
};

// Streams g in node id order.
absl::StatusOr<std::optional<StreamResult>> StreamGraph(
    const GcnModel& model, const Graph& g, GraphId source,
    const Config& config, ClassLabel label);

}  // namespace viewex

#endif  // VIEWEX_STREAMER_H_
