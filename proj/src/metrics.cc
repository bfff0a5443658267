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

#include "viewex/metrics.h"

#include <map>
#include <numeric>
#include <random>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"
#include "viewex/parallel.h"

namespace viewex {
namespace {

double Probability(const GcnModel& model, const Graph& g, ClassLabel label) {
  return Forward(model, g)->probabilities(label);
}

int InducedEdges(const Graph& g, const std::set<NodeId>& nodes) {
  int count = 0;
  for (const Edge& e : g.edges()) {
    if (nodes.contains(e.u) && nodes.contains(e.v)) ++count;
  }
  return count;
}

}  // namespace

double FidelityPlus(const GcnModel& model, const Graph& g,
                    const std::set<NodeId>& nodes, ClassLabel label) {
  return Probability(model, g, label) -
         Probability(model, RemoveSubgraph(g, nodes), label);
}

double FidelityMinus(const GcnModel& model, const Graph& g,
                     const std::set<NodeId>& nodes, ClassLabel label) {
  return Probability(model, g, label) -
         Probability(model, InducedSubgraph(g, nodes), label);
}

double Sparsity(const Graph& g, const std::set<NodeId>& nodes) {
  const int total = g.num_nodes() + g.num_edges();
  if (total == 0) return 1.0;
  const int kept = static_cast<int>(nodes.size()) + InducedEdges(g, nodes);
  return 1.0 - static_cast<double>(kept) / total;
}

double Compression(std::span<const ExplanationView> views) {
  std::map<CanonicalCode, int> pattern_sizes;
  int subgraph_size = 0;
  for (const ExplanationView& view : views) {
    for (const Pattern& p : view.patterns) {
      pattern_sizes.emplace(p.code(), p.num_nodes() + p.num_edges());
    }
    for (const ExplanationSubgraph& s : view.subgraphs) {
      subgraph_size += s.graph.num_nodes() + s.graph.num_edges();
    }
  }
  if (subgraph_size == 0) return 0.0;
  int pattern_size = 0;
  for (const auto& [code, size] : pattern_sizes) pattern_size += size;
  return 1.0 - static_cast<double>(pattern_size) / subgraph_size;
}

double EdgeLossPct(std::span<const ExplanationView> views) {
  int covered = 0;
  int total = 0;
  for (const ExplanationView& view : views) {
    const CoverageReport r = MeasureCoverage(view.patterns, view.subgraphs);
    covered += r.edges_covered;
    total += r.edges_total;
  }
  if (total == 0) return 0.0;
  return 100.0 * (total - covered) / total;
}

double RandomFidelityPlus(const GcnModel& model, const Graph& g,
                          ClassLabel label, int size, int samples,
                          uint64_t seed) {
  if (samples <= 0) return 0.0;
  std::mt19937_64 rng(seed);
  std::vector<NodeId> order(g.num_nodes());
  const int k = std::min(size, g.num_nodes());
  double total = 0.0;
  for (int s = 0; s < samples; ++s) {
    std::iota(order.begin(), order.end(), 0);
    // Partial Fisher-Yates; modulo draws keep the stream portable.
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng() % (order.size() - i));
      std::swap(order[i], order[j]);
    }
    total += FidelityPlus(model, g,
                          std::set<NodeId>(order.begin(), order.begin() + k),
                          label);
  }
  return total / samples;
}

absl::StatusOr<MetricsReport> EvaluateViews(
    const GraphDatabase& db, std::span<const ExplanationView> views,
    const GcnModel& model, int workers, int baseline_samples, uint64_t seed) {
  std::vector<const ExplanationSubgraph*> by_graph(db.size(), nullptr);
  for (const ExplanationView& view : views) {
    for (const ExplanationSubgraph& s : view.subgraphs) {
      if (s.source_graph < 0 || s.source_graph >= db.size()) {
        return absl::InvalidArgumentError(
            absl::StrFormat("explanation names unknown graph %d",
                            s.source_graph));
      }
      if (by_graph[s.source_graph] != nullptr) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "graph %d has more than one explanation", s.source_graph));
      }
      for (NodeId v : s.nodes) {
        if (v < 0 || v >= db.graph(s.source_graph).num_nodes()) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "explanation of graph %d names unknown node %d",
              s.source_graph, v));
        }
      }
      by_graph[s.source_graph] = &s;
    }
  }
  std::vector<GraphMetrics> slots(db.size());
  ParallelFor(db.size(), workers, [&](int i) {
    const ExplanationSubgraph* s = by_graph[i];
    if (s == nullptr || s->nodes.empty()) return;
    const Graph& g = db.graph(i);
    slots[i] = {i,
                s->label,
                static_cast<int>(s->nodes.size()),
                FidelityPlus(model, g, s->nodes, s->label),
                FidelityMinus(model, g, s->nodes, s->label),
                Sparsity(g, s->nodes),
                RandomFidelityPlus(model, g, s->label,
                                   static_cast<int>(s->nodes.size()),
                                   baseline_samples, seed + i)};
  });
  MetricsReport report;
  for (GraphId i = 0; i < db.size(); ++i) {
    if (by_graph[i] == nullptr || by_graph[i]->nodes.empty()) {
      report.excluded.push_back(i);
      continue;
    }
    report.per_graph.push_back(slots[i]);
    report.fidelity_plus += slots[i].fidelity_plus;
    report.fidelity_minus += slots[i].fidelity_minus;
    report.sparsity += slots[i].sparsity;
    report.random_fidelity_plus += slots[i].random_fidelity_plus;
  }
  if (!report.per_graph.empty()) {
    const double n = static_cast<double>(report.per_graph.size());
    report.fidelity_plus /= n;
    report.fidelity_minus /= n;
    report.sparsity /= n;
    report.random_fidelity_plus /= n;
  }
  report.baseline_samples = baseline_samples;
  report.compression = Compression(views);
  report.edge_loss_pct = EdgeLossPct(views);
  return report;
}

}  // namespace viewex
