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

// Explainability of explanation node sets.
//
// For a node set S of a graph with node set V:
//   Inf(S) = { v in V : normalized(u, v) >= theta for some u in S }
//   I(S)   = |Inf(S)|
//   D(S)   = | union over v in Inf(S) of { v' : d(v, v') <= radius } |
// where d is the Euclidean distance between L2-normalized last-layer
// embeddings. The per-graph score is (I(S) + gamma * D(S)) / |V|, and the
// explainability of a collection of explanation node sets is the sum of the
// per-graph scores. Both I and D are coverage functions, hence monotone and
// submodular in S.

#ifndef VIEWEX_SCORING_H_
#define VIEWEX_SCORING_H_

#include <set>
#include <span>
#include <vector>

#include "viewex/config.h"
#include "viewex/graph.h"
#include "viewex/influence.h"

namespace viewex {

int InfluenceScore(const InfluenceTable& table, const std::set<NodeId>& nodes,
                   double theta);

int DiversityScore(const InfluenceTable& table, const std::set<NodeId>& nodes,
                   double theta, double radius);

// (I + gamma * D) / |V| for one graph, computed from scratch.
double GraphExplainability(const InfluenceTable& table,
                           const std::set<NodeId>& nodes, const Config& config);

// Sum of GraphExplainability over graphs; node_sets[i] belongs to tables[i].
double Explainability(std::span<const std::set<NodeId>> node_sets,
                      std::span<const InfluenceTable* const> tables,
                      const Config& config);

// Thresholded view of one influence table: who influences whom, and the
// embedding ball of every node.
class ObjectiveIndex {
 public:
  ObjectiveIndex(const InfluenceTable& table, const Config& config);

  int num_nodes() const { return static_cast<int>(influences_.size()); }
  double gamma() const { return gamma_; }
  const std::vector<NodeId>& influenced_by(NodeId u) const {
    return influences_[u];
  }
  const std::vector<NodeId>& ball(NodeId v) const { return balls_[v]; }

 private:
  double gamma_;
  std::vector<std::vector<NodeId>> influences_;
  std::vector<std::vector<NodeId>> balls_;
};

// Incrementally maintained score of a selected node set. Reference counts
// make removals exact.
class ScoreState {
 public:
  explicit ScoreState(const ObjectiveIndex& index);

  void Add(NodeId u);
  void Remove(NodeId u);

  const std::set<NodeId>& selected() const { return selected_; }
  int influence() const { return influence_; }
  int diversity() const { return diversity_; }
  double Value() const;

  // Value(S + u) - Value(S), u not selected.
  double Gain(NodeId u) const;
  // Value(S) - Value(S - u), u selected.
  double Loss(NodeId u) const;

  // Sets of currently influenced / ball-covered nodes.
  std::set<NodeId> InfluencedNodes() const;
  std::set<NodeId> DiversityUnion() const;

 private:
  const ObjectiveIndex* index_;
  std::set<NodeId> selected_;
  std::vector<int> influence_count_;
  std::vector<int> ball_count_;
  int influence_ = 0;
  int diversity_ = 0;
};

}  // namespace viewex

#endif  // VIEWEX_SCORING_H_
