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

#include "viewex/streamer.h"

#include <algorithm>
#include <queue>
#include <utility>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"
#include "viewex/scoring.h"

namespace viewex {
namespace {

std::optional<NodeId> BestGain(const ScoreState& state,
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

std::vector<NodeId> HopBall(const Topology& t, NodeId source, int hops) {
  std::vector<int> dist(t.num_nodes(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const NodeId x = frontier.front();
    frontier.pop();
    if (dist[x] == hops) continue;
    for (const Neighbor& nb : t.neighbors(x)) {
      if (dist[nb.node] < 0) {
        dist[nb.node] = dist[x] + 1;
        frontier.push(nb.node);
      }
    }
  }
  std::vector<NodeId> ball;
  for (NodeId x = 0; x < t.num_nodes(); ++x) {
    if (dist[x] >= 0) ball.push_back(x);
  }
  return ball;
}

}  // namespace

StreamExplainer::StreamExplainer(const GcnModel& model, const Config& config,
                                 ClassLabel label, GraphId source)
    : model_(&model),
      config_(config),
      label_(label),
      source_(source),
      tracker_(model, config.influence) {}

bool StreamExplainer::Verifies(const std::set<NodeId>& nodes) const {
  return VerifyExplanation(*model_, graph(), nodes, label_);
}

double StreamExplainer::Value() const {
  return GraphExplainability(table(), selected_, config_);
}

absl::Status StreamExplainer::Step(NodeId v, TypeId type,
                                   const Eigen::VectorXd& features,
                                   const std::vector<Neighbor>& edges) {
  if (v < graph().num_nodes()) {
    return absl::AlreadyExistsError(
        absl::StrFormat("node %d has already arrived", v));
  }
  if (v != graph().num_nodes()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "node %d arrived out of order, expected %d", v, graph().num_nodes()));
  }
  if (absl::Status s = tracker_.AddNode(type, features, edges); !s.ok()) {
    return s;
  }
  reservoir_.insert(v);
  {
    const ObjectiveIndex index(table(), config_);
    ScoreState state(index);
    for (NodeId u : selected_) state.Add(u);
    last_gain_ = state.Gain(v);
  }
  UpdateNodeCache(v);
  if (selected_.contains(v)) UpdatePatterns();
  return absl::OkStatus();
}

bool StreamExplainer::CoveredByCache(NodeId v) const {
  std::set<NodeId> nodes = selected_;
  nodes.insert(v);
  const Graph sub = InducedSubgraph(graph(), nodes);
  const NodeId local =
      static_cast<NodeId>(std::distance(nodes.begin(), nodes.find(v)));
  return !Covers(patterns_, sub, {local}).nodes.empty();
}

bool StreamExplainer::BringsNewPattern(NodeId v) const {
  std::set<CanonicalCode> known;
  for (const Pattern& p : patterns_) known.insert(p.code());
  const std::vector<NodeId> ball =
      HopBall(graph().topology(), v, config_.hops());
  const Topology local = InducedTopology(graph().topology(), ball);
  const NodeId root = static_cast<NodeId>(
      std::lower_bound(ball.begin(), ball.end(), v) - ball.begin());
  // Connected node sets through the new node, grown one neighbor at a time.
  std::set<std::vector<NodeId>> level = {{root}};
  for (int size = 1; size <= config_.pattern_max_nodes && !level.empty();
       ++size) {
    std::set<std::vector<NodeId>> next;
    for (const std::vector<NodeId>& nodes : level) {
      if (!known.contains(
              ComputeCanonicalCode(InducedTopology(local, nodes)))) {
        return true;
      }
      if (size == config_.pattern_max_nodes) continue;
      for (NodeId x : nodes) {
        for (const Neighbor& nb : local.neighbors(x)) {
          if (std::binary_search(nodes.begin(), nodes.end(), nb.node)) continue;
          std::vector<NodeId> grown = nodes;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), nb.node),
                       nb.node);
          next.insert(std::move(grown));
        }
      }
    }
    level = std::move(next);
  }
  return false;
}

void StreamExplainer::UpdateNodeCache(NodeId v) {
  const int upper = config_.bounds(label_).upper;
  if (static_cast<int>(selected_.size()) < upper) {
    std::set<NodeId> grown = selected_;
    grown.insert(v);
    if (Verifies(grown)) {
      selected_ = std::move(grown);
      last_decision_ = StreamDecision::kAdded;
    } else {
      last_decision_ = StreamDecision::kRejected;
    }
    return;
  }
  if (selected_.empty()) {
    last_decision_ = StreamDecision::kRejected;
    return;
  }
  if (CoveredByCache(v) || !BringsNewPattern(v)) {
    last_decision_ = StreamDecision::kSkipped;
    return;
  }
  // The evictee is the cached node of least loss among those whose
  // replacement by v still verifies.
  const ObjectiveIndex index(table(), config_);
  ScoreState state(index);
  for (NodeId u : selected_) state.Add(u);
  std::optional<NodeId> evict;
  double evict_loss = 0.0;
  for (NodeId u : selected_) {
    std::set<NodeId> swapped = selected_;
    swapped.erase(u);
    swapped.insert(v);
    if (!Verifies(swapped)) continue;
    const double loss = state.Loss(u);
    if (!evict.has_value() || loss < evict_loss) {
      evict = u;
      evict_loss = loss;
    }
  }
  if (!evict.has_value()) {
    last_decision_ = StreamDecision::kRejected;
    return;
  }
  state.Remove(*evict);
  const double gain_new = state.Gain(v);
  const double gain_old = state.Gain(*evict);
  if (gain_new >= 2.0 * gain_old) {
    selected_.erase(*evict);
    selected_.insert(v);
    reservoir_.insert(*evict);
    last_decision_ = StreamDecision::kSwapped;
  } else {
    last_decision_ = StreamDecision::kKept;
  }
}

void StreamExplainer::UpdatePatterns() {
  const Graph sub = InducedSubgraph(graph(), selected_);
  std::set<NodeId> covered;
  std::vector<bool> used(patterns_.size(), false);
  std::vector<std::set<int>> pattern_edges(patterns_.size());
  for (size_t i = 0; i < patterns_.size(); ++i) {
    const Coverage cov = Covers(std::span(&patterns_[i], 1), sub.topology());
    used[i] = !cov.nodes.empty();
    covered.insert(cov.nodes.begin(), cov.nodes.end());
    pattern_edges[i] = cov.edges;
  }
  std::vector<NodeId> rest;
  for (NodeId x = 0; x < sub.num_nodes(); ++x) {
    if (!covered.contains(x)) rest.push_back(x);
  }
  if (!rest.empty()) {
    // Each connected piece of the uncovered part becomes a pattern; it
    // matches itself, so coverage is restored.
    std::set<CanonicalCode> known;
    for (const Pattern& p : patterns_) known.insert(p.code());
    const Topology uncovered = InducedTopology(sub.topology(), rest);
    for (const std::vector<NodeId>& comp : uncovered.ConnectedComponents()) {
      Pattern p = *Pattern::Create(InducedTopology(uncovered, comp));
      if (!known.insert(p.code()).second) continue;
      const Coverage cov = Covers(std::span(&p, 1), sub.topology());
      patterns_.push_back(std::move(p));
      used.push_back(true);
      pattern_edges.push_back(cov.edges);
    }
  }
  const int capacity = config_.pattern_cache_capacity;
  if (capacity <= 0) return;
  const int total_edges = sub.num_edges();
  while (static_cast<int>(patterns_.size()) > capacity) {
    // Evict the unused pattern that misses the most explanation edges.
    int worst = -1;
    double worst_weight = -1.0;
    for (size_t i = 0; i < patterns_.size(); ++i) {
      if (used[i]) continue;
      const double w =
          total_edges == 0
              ? 0.0
              : 1.0 - static_cast<double>(pattern_edges[i].size()) /
                          total_edges;
      if (w > worst_weight) {
        worst = static_cast<int>(i);
        worst_weight = w;
      }
    }
    if (worst < 0) break;
    patterns_.erase(patterns_.begin() + worst);
    used.erase(used.begin() + worst);
    pattern_edges.erase(pattern_edges.begin() + worst);
  }
}

std::optional<StreamResult> StreamExplainer::Finish() const {
  StreamExplainer done = *this;
  const ObjectiveIndex index(table(), config_);
  ScoreState state(index);
  for (NodeId u : done.selected_) state.Add(u);
  const int lower = config_.bounds(label_).lower;
  while (!done.Verifies(done.selected_) ||
         static_cast<int>(done.selected_.size()) < lower) {
    std::vector<NodeId> candidates;
    for (NodeId u : done.reservoir_) {
      if (done.selected_.contains(u)) continue;
      if (CanExtend(*model_, graph(), config_, label_, done.selected_, u)) {
        candidates.push_back(u);
      }
    }
    const std::optional<NodeId> pick = BestGain(state, candidates);
    if (!pick.has_value()) return std::nullopt;
    state.Add(*pick);
    done.selected_.insert(*pick);
  }
  done.UpdatePatterns();
  StreamResult result;
  result.subgraph = MakeExplanation(source_, graph(), done.selected_, label_);
  for (const Pattern& p : done.patterns_) {
    if (HasMatch(p.topology(), result.subgraph.graph.topology())) {
      result.patterns.push_back(p);
    }
  }
  return result;
}

absl::StatusOr<std::optional<StreamResult>> StreamGraph(
    const GcnModel& model, const Graph& g, GraphId source,
    const Config& config, ClassLabel label) {
  absl::StatusOr<InferenceResult> fwd = Forward(model, g);
  if (!fwd.ok()) return fwd.status();
  if (fwd->label != label) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "graph %d is classified %d, not %d", source, fwd->label, label));
  }
  StreamExplainer stream(model, config, label, source);
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    std::vector<Neighbor> back;
    for (const Neighbor& nb : g.neighbors(v)) {
      if (nb.node < v) back.push_back(nb);
    }
    absl::Status s = stream.Step(v, g.node_type(v),
                                 g.features().row(v).transpose(), back);
    if (!s.ok()) return s;
  }
  return stream.Finish();
}

}  // namespace viewex
