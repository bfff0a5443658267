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

// Summarizes explanation subgraphs by graph patterns.
//
// Candidate patterns are the connected induced subgraphs (up to a size cap)
// that occur in at least `pattern_min_support` explanation subgraphs, plus a
// single-node pattern for every node type present so that a full node cover
// always exists. A pattern's weight is the fraction of explanation edges its
// matches miss. Patterns are then chosen by greedy weighted set cover over
// the explanation nodes.

#ifndef VIEWEX_SUMMARIZER_H_
#define VIEWEX_SUMMARIZER_H_

#include <set>
#include <span>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "viewex/config.h"
#include "viewex/explainer.h"
#include "viewex/graph.h"

namespace viewex {

// (subgraph index, node id in the source graph).
using ViewNode = std::pair<int, NodeId>;
// (subgraph index, edge index in the subgraph's induced graph).
using ViewEdge = std::pair<int, int>;

struct PatternCandidate {
  Pattern pattern;
  std::set<ViewNode> covered_nodes;
  std::set<ViewEdge> covered_edges;
  // Number of subgraphs with at least one match.
  int support = 0;
  double weight = 0.0;
};

struct CoverageReport {
  int nodes_covered = 0;
  int nodes_total = 0;
  int edges_covered = 0;
  int edges_total = 0;

  // Percentage of explanation edges no pattern covers.
  double edge_loss_pct() const;
  bool full_node_coverage() const { return nodes_covered == nodes_total; }
};

struct ExplanationView {
  ClassLabel label = 0;
  std::vector<Pattern> patterns;
  std::vector<ExplanationSubgraph> subgraphs;
  CoverageReport coverage;
};

// Coverage of `pattern` over the subgraphs, with its weight.
PatternCandidate EvaluatePattern(
    Pattern pattern, std::span<const ExplanationSubgraph> subgraphs);

CoverageReport MeasureCoverage(std::span<const Pattern> patterns,
                               std::span<const ExplanationSubgraph> subgraphs);

// Candidates ordered by canonical code.
std::vector<PatternCandidate> GeneratePatterns(
    std::span<const ExplanationSubgraph> subgraphs, const Config& config);

// Indices of the candidates picked by greedy weighted set cover of all
// explanation nodes. Zero-weight candidates rank first, by coverage; others
// by newly covered nodes per unit weight. Ties: more newly covered nodes,
// then lower weight, then smaller canonical code.
absl::StatusOr<std::vector<int>> GreedyPatternCover(
    std::span<const PatternCandidate> candidates,
    std::span<const ExplanationSubgraph> subgraphs);

absl::StatusOr<ExplanationView> Summarize(
    ClassLabel label, std::vector<ExplanationSubgraph> subgraphs,
    const Config& config);

}  // namespace viewex

#endif  // VIEWEX_SUMMARIZER_H_
