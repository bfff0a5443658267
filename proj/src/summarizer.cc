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

#include "viewex/summarizer.h"

#include <algorithm>
#include <map>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"

namespace viewex {
namespace {

int TotalEdges(std::span<const ExplanationSubgraph> subgraphs) {
  int total = 0;
  for (const ExplanationSubgraph& s : subgraphs) total += s.graph.num_edges();
  return total;
}

using NodeSet = std::vector<NodeId>;

struct Occurrence {
  std::set<int> subgraphs;
  // First occurrence, used to build the pattern.
  int subgraph = 0;
  NodeSet nodes;
};

}  // namespace

double CoverageReport::edge_loss_pct() const {
  if (edges_total == 0) return 0.0;
  return 100.0 * (edges_total - edges_covered) / edges_total;
}

PatternCandidate EvaluatePattern(
    Pattern pattern, std::span<const ExplanationSubgraph> subgraphs) {
  PatternCandidate c;
  for (size_t i = 0; i < subgraphs.size(); ++i) {
    const Graph& g = subgraphs[i].graph;
    const Coverage cov = Covers(std::span(&pattern, 1), g.topology());
    if (!cov.nodes.empty()) ++c.support;
    for (NodeId v : cov.nodes) {
      c.covered_nodes.insert({static_cast<int>(i), g.original_id(v)});
    }
    for (int e : cov.edges) c.covered_edges.insert({static_cast<int>(i), e});
  }
  const int total = TotalEdges(subgraphs);
  c.weight = total == 0 ? 0.0
                        : 1.0 - static_cast<double>(c.covered_edges.size()) /
                                    total;
  c.pattern = std::move(pattern);
  return c;
}

CoverageReport MeasureCoverage(std::span<const Pattern> patterns,
                               std::span<const ExplanationSubgraph> subgraphs) {
  CoverageReport r;
  for (const ExplanationSubgraph& s : subgraphs) {
    const Coverage cov = Covers(patterns, s.graph.topology());
    r.nodes_total += s.graph.num_nodes();
    r.edges_total += s.graph.num_edges();
    r.nodes_covered += static_cast<int>(cov.nodes.size());
    r.edges_covered += static_cast<int>(cov.edges.size());
  }
  return r;
}

std::vector<PatternCandidate> GeneratePatterns(
    std::span<const ExplanationSubgraph> subgraphs, const Config& config) {
  std::map<CanonicalCode, Occurrence> frequent;
  std::set<TypeId> types;
  // Level-wise growth of connected induced node sets. A node-induced
  // sub-pattern occurs wherever its super-pattern does, so sets whose
  // pattern is infrequent are not extended.
  std::vector<std::set<NodeSet>> level(subgraphs.size());
  for (size_t i = 0; i < subgraphs.size(); ++i) {
    for (NodeId v = 0; v < subgraphs[i].graph.num_nodes(); ++v) {
      level[i].insert({v});
      types.insert(subgraphs[i].graph.node_type(v));
    }
  }
  for (int size = 1; size <= config.pattern_max_nodes; ++size) {
    std::map<CanonicalCode, Occurrence> seen;
    std::vector<std::vector<std::pair<NodeSet, CanonicalCode>>> coded(
        subgraphs.size());
    for (size_t i = 0; i < subgraphs.size(); ++i) {
      const Topology& t = subgraphs[i].graph.topology();
      for (const NodeSet& nodes : level[i]) {
        CanonicalCode code = ComputeCanonicalCode(InducedTopology(t, nodes));
        Occurrence& occ = seen[code];
        if (occ.subgraphs.empty()) {
          occ.subgraph = static_cast<int>(i);
          occ.nodes = nodes;
        }
        occ.subgraphs.insert(static_cast<int>(i));
        coded[i].emplace_back(nodes, std::move(code));
      }
    }
    bool any = false;
    std::vector<std::set<NodeSet>> next(subgraphs.size());
    for (size_t i = 0; i < subgraphs.size(); ++i) {
      const Topology& t = subgraphs[i].graph.topology();
      for (const auto& [nodes, code] : coded[i]) {
        const Occurrence& occ = seen.at(code);
        if (static_cast<int>(occ.subgraphs.size()) <
            config.pattern_min_support) {
          continue;
        }
        frequent.emplace(code, occ);
        any = true;
        if (size == config.pattern_max_nodes) continue;
        for (NodeId v : nodes) {
          for (const Neighbor& nb : t.neighbors(v)) {
            if (std::binary_search(nodes.begin(), nodes.end(), nb.node)) {
              continue;
            }
            NodeSet grown = nodes;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), nb.node),
                         nb.node);
            next[i].insert(std::move(grown));
          }
        }
      }
    }
    if (!any) break;
    level = std::move(next);
  }

  std::map<CanonicalCode, Pattern> patterns;
  for (const auto& [code, occ] : frequent) {
    const Topology t = InducedTopology(
        subgraphs[occ.subgraph].graph.topology(), occ.nodes);
    patterns.emplace(code, *Pattern::Create(t));
  }
  for (TypeId type : types) {
    Pattern p = Pattern::Singleton(type);
    patterns.emplace(p.code(), std::move(p));
  }
  std::vector<PatternCandidate> out;
  for (auto& [code, p] : patterns) {
    out.push_back(EvaluatePattern(std::move(p), subgraphs));
  }
  return out;
}

absl::StatusOr<std::vector<int>> GreedyPatternCover(
    std::span<const PatternCandidate> candidates,
    std::span<const ExplanationSubgraph> subgraphs) {
  std::set<ViewNode> uncovered;
  for (size_t i = 0; i < subgraphs.size(); ++i) {
    for (NodeId v : subgraphs[i].nodes) {
      uncovered.insert({static_cast<int>(i), v});
    }
  }
  // True iff candidate a (covering na new nodes) ranks before b.
  auto better = [&](int a, int na, int b, int nb) {
    const double wa = candidates[a].weight;
    const double wb = candidates[b].weight;
    if ((wa == 0.0) != (wb == 0.0)) return wa == 0.0;
    if (wa > 0.0) {
      const double ra = na / wa;
      const double rb = nb / wb;
      if (ra != rb) return ra > rb;
    }
    if (na != nb) return na > nb;
    if (wa != wb) return wa < wb;
    return candidates[a].pattern.code() < candidates[b].pattern.code();
  };
  std::vector<int> chosen;
  while (!uncovered.empty()) {
    int best = -1;
    int best_new = 0;
    for (size_t c = 0; c < candidates.size(); ++c) {
      int fresh = 0;
      for (const ViewNode& n : candidates[c].covered_nodes) {
        fresh += uncovered.contains(n);
      }
      if (fresh == 0) continue;
      if (best < 0 || better(static_cast<int>(c), fresh, best, best_new)) {
        best = static_cast<int>(c);
        best_new = fresh;
      }
    }
    if (best < 0) {
      return absl::InternalError(absl::StrFormat(
          "%d explanation nodes cannot be covered by any candidate",
          uncovered.size()));
    }
    for (const ViewNode& n : candidates[best].covered_nodes) uncovered.erase(n);
    chosen.push_back(best);
  }
  return chosen;
}

absl::StatusOr<ExplanationView> Summarize(
    ClassLabel label, std::vector<ExplanationSubgraph> subgraphs,
    const Config& config) {
  ExplanationView view;
  view.label = label;
  const std::vector<PatternCandidate> candidates =
      GeneratePatterns(subgraphs, config);
  absl::StatusOr<std::vector<int>> chosen =
      GreedyPatternCover(candidates, subgraphs);
  if (!chosen.ok()) return chosen.status();
  for (int c : *chosen) view.patterns.push_back(candidates[c].pattern);
  view.coverage = MeasureCoverage(view.patterns, subgraphs);
  view.subgraphs = std::move(subgraphs);
  return view;
}

}  // namespace viewex
