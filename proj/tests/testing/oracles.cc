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

#include "testing/oracles.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace viewex::testing {
namespace {

// Dense adjacency with edge types + 1 (0 = no edge).
Eigen::MatrixXi TypedAdjacency(const Topology& t) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(t.num_nodes(), t.num_nodes());
  for (const Edge& e : t.edges()) {
    a(e.u, e.v) = e.type + 1;
    a(e.v, e.u) = e.type + 1;
  }
  return a;
}

Eigen::MatrixXd DenseS(const Topology& t) {
  const int n = t.num_nodes();
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
  for (const Edge& e : t.edges()) {
    a(e.u, e.v) = 1.0;
    a(e.v, e.u) = 1.0;
  }
  Eigen::VectorXd d = a.rowwise().sum();
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) s(i, j) = a(i, j) / std::sqrt(d[i] * d[j]);
  }
  return s;
}

Eigen::MatrixXd LastLayer(const GcnModel& model, const Eigen::MatrixXd& s,
                          Eigen::MatrixXd x) {
  for (const Eigen::MatrixXd& w : model.layers()) {
    x = (s * x * w).cwiseMax(0.0);
  }
  return x;
}

}  // namespace

std::vector<std::vector<NodeId>> BruteForceMatches(const Topology& pattern,
                                                   const Topology& target) {
  const int k = pattern.num_nodes();
  const int n = target.num_nodes();
  const Eigen::MatrixXi pa = TypedAdjacency(pattern);
  const Eigen::MatrixXi ta = TypedAdjacency(target);
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> map(k);
  std::vector<bool> used(n, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      for (int a = 0; a < k; ++a) {
        if (pattern.node_type(a) != target.node_type(map[a])) return;
        for (int b = 0; b < k; ++b) {
          if (a != b && pa(a, b) != ta(map[a], map[b])) return;
        }
      }
      out.push_back(map);
      return;
    }
    for (NodeId v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[i] = v;
      rec(i + 1);
      used[v] = false;
    }
  };
  if (k <= n) rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

bool BruteIsomorphic(const Topology& a, const Topology& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) {
    return false;
  }
  return !BruteForceMatches(a, b).empty();
}

DenseResult DenseForward(const GcnModel& model, const Graph& g) {
  DenseResult r;
  const Eigen::MatrixXd s = DenseS(g.topology());
  Eigen::MatrixXd x = g.features();
  r.embeddings.push_back(x);
  for (const Eigen::MatrixXd& w : model.layers()) {
    x = (s * x * w).cwiseMax(0.0);
    r.embeddings.push_back(x);
  }
  Eigen::VectorXd pooled = Eigen::VectorXd::Zero(model.embedding_dim());
  if (g.num_nodes() > 0) pooled = x.colwise().maxCoeff().transpose();
  r.logits = model.classifier_weight().transpose() * pooled +
             model.classifier_bias();
  const double top = r.logits.maxCoeff();
  Eigen::VectorXd e = (r.logits.array() - top).exp();
  r.probabilities = e / e.sum();
  r.label = 0;
  for (int c = 1; c < r.logits.size(); ++c) {
    if (r.logits[c] > r.logits[r.label]) r.label = c;
  }
  return r;
}

Graph DenseInduced(const Graph& g, const std::set<NodeId>& nodes) {
  std::vector<NodeId> ids(nodes.begin(), nodes.end());
  std::vector<TypeId> types;
  Eigen::MatrixXd features(ids.size(), g.feature_dim());
  for (size_t i = 0; i < ids.size(); ++i) {
    types.push_back(g.node_type(ids[i]));
    features.row(i) = g.features().row(ids[i]);
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < ids.size(); ++i) {
    for (size_t j = i + 1; j < ids.size(); ++j) {
      for (const Edge& e : g.edges()) {
        if (e.u == ids[i] && e.v == ids[j]) {
          edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j),
                           e.type});
        }
      }
    }
  }
  return *Graph::Create(std::move(types), std::move(features),
                        std::move(edges), ids);
}

bool OracleVerify(const GcnModel& model, const Graph& g,
                  const std::set<NodeId>& nodes, int label) {
  if (nodes.empty()) return false;
  std::set<NodeId> rest;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!nodes.contains(v)) rest.insert(v);
  }
  return DenseForward(model, DenseInduced(g, nodes)).label == label &&
         DenseForward(model, DenseInduced(g, rest)).label != label;
}

Eigen::MatrixXd FiniteDifferenceInfluence(const GcnModel& model,
                                          const Graph& g, double step) {
  const int n = g.num_nodes();
  const Eigen::MatrixXd s = DenseS(g.topology());
  Eigen::MatrixXd raw = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int a = 0; a < g.feature_dim(); ++a) {
      Eigen::MatrixXd plus = g.features();
      Eigen::MatrixXd minus = g.features();
      plus(u, a) += step;
      minus(u, a) -= step;
      const Eigen::MatrixXd diff =
          (LastLayer(model, s, plus) - LastLayer(model, s, minus)) /
          (2.0 * step);
      raw.col(u) += diff.cwiseAbs().rowwise().sum();
    }
  }
  return raw;
}

Eigen::MatrixXd DenseMatrixPower(const Topology& t, int k) {
  const Eigen::MatrixXd s = DenseS(t);
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(t.num_nodes(), t.num_nodes());
  for (int i = 0; i < k; ++i) p = p * s;
  return p;
}

Eigen::MatrixXd OracleNormalize(const Eigen::MatrixXd& raw) {
  const int n = static_cast<int>(raw.rows());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    double total = 0.0;
    for (int w = 0; w < n; ++w) total += raw(v, w);
    if (total <= 0.0) continue;
    for (int u = 0; u < n; ++u) out(u, v) = raw(v, u) / total;
  }
  return out;
}

int OracleInfluence(const Eigen::MatrixXd& normalized,
                    const std::set<NodeId>& nodes, double theta) {
  int count = 0;
  for (int v = 0; v < normalized.rows(); ++v) {
    bool hit = false;
    for (NodeId u : nodes) hit = hit || normalized(u, v) >= theta;
    count += hit;
  }
  return count;
}

int OracleDiversity(const Eigen::MatrixXd& normalized,
                    const Eigen::MatrixXd& embeddings,
                    const std::set<NodeId>& nodes, double theta,
                    double radius) {
  const int n = static_cast<int>(normalized.rows());
  std::vector<bool> covered(n, false);
  auto unit = [&](int i) -> Eigen::VectorXd {
    Eigen::VectorXd x = embeddings.row(i).transpose();
    const double norm = x.norm();
    return norm > 0.0 ? Eigen::VectorXd(x / norm) : x;
  };
  for (int v = 0; v < n; ++v) {
    bool influenced = false;
    for (NodeId u : nodes) influenced = influenced || normalized(u, v) >= theta;
    if (!influenced) continue;
    for (int w = 0; w < n; ++w) {
      if ((unit(v) - unit(w)).norm() <= radius) covered[w] = true;
    }
  }
  return static_cast<int>(std::count(covered.begin(), covered.end(), true));
}

double OracleGraphScore(const Eigen::MatrixXd& normalized,
                        const Eigen::MatrixXd& embeddings,
                        const std::set<NodeId>& nodes, double theta,
                        double radius, double gamma) {
  const int n = static_cast<int>(normalized.rows());
  if (n == 0) return 0.0;
  return (OracleInfluence(normalized, nodes, theta) +
          gamma * OracleDiversity(normalized, embeddings, nodes, theta,
                                  radius)) /
         n;
}

std::optional<SubsetOptimum> ExhaustiveOptimum(
    const GcnModel& model, const Graph& g, const Eigen::MatrixXd& normalized,
    const Eigen::MatrixXd& embeddings, int label, int lower, int upper,
    double theta, double radius, double gamma) {
  const int n = g.num_nodes();
  std::optional<SubsetOptimum> best;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size < lower || size > upper) continue;
    std::set<NodeId> nodes;
    for (int v = 0; v < n; ++v) {
      if (mask & (1u << v)) nodes.insert(v);
    }
    if (!OracleVerify(model, g, nodes, label)) continue;
    const double value =
        OracleGraphScore(normalized, embeddings, nodes, theta, radius, gamma);
    if (!best.has_value() || value > best->value) {
      best = SubsetOptimum{value, nodes};
    }
  }
  return best;
}

std::optional<double> ExhaustiveMinCover(
    int universe, const std::vector<std::set<int>>& sets,
    const std::vector<double>& weights) {
  // Memoized search over covered-element masks: the first uncovered element
  // must be covered by one of the sets containing it.
  const uint32_t full = (1u << universe) - 1;
  std::vector<uint32_t> masks;
  for (const std::set<int>& s : sets) {
    uint32_t m = 0;
    for (int x : s) m |= 1u << x;
    masks.push_back(m);
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> memo(full + 1, -1.0);
  std::function<double(uint32_t)> cost = [&](uint32_t covered) -> double {
    if (covered == full) return 0.0;
    if (memo[covered] >= 0.0) return memo[covered];
    const int e = __builtin_ctz(~covered);
    double best = kInf;
    for (size_t i = 0; i < masks.size(); ++i) {
      if (!(masks[i] & (1u << e))) continue;
      best = std::min(best, weights[i] + cost(covered | masks[i]));
    }
    return memo[covered] = best;
  };
  const double best = cost(0);
  if (best == kInf) return std::nullopt;
  return best;
}

}  // namespace viewex::testing
