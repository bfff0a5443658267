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

#include "viewex/scoring.h"

namespace viewex {
namespace {

Eigen::MatrixXd NormalizedRows(const Eigen::MatrixXd& m) {
  Eigen::MatrixXd out = m;
  for (int i = 0; i < out.rows(); ++i) {
    const double norm = out.row(i).norm();
    if (norm > 0.0) out.row(i) /= norm;
  }
  return out;
}

std::set<NodeId> Influenced(const InfluenceTable& table,
                            const std::set<NodeId>& nodes, double theta) {
  std::set<NodeId> influenced;
  for (NodeId v = 0; v < table.num_nodes(); ++v) {
    for (NodeId u : nodes) {
      if (table.normalized(u, v) >= theta) {
        influenced.insert(v);
        break;
      }
    }
  }
  return influenced;
}

}  // namespace

int InfluenceScore(const InfluenceTable& table, const std::set<NodeId>& nodes,
                   double theta) {
  return static_cast<int>(Influenced(table, nodes, theta).size());
}

int DiversityScore(const InfluenceTable& table, const std::set<NodeId>& nodes,
                   double theta, double radius) {
  const Eigen::MatrixXd unit = NormalizedRows(table.embeddings);
  std::set<NodeId> covered;
  for (NodeId v : Influenced(table, nodes, theta)) {
    for (NodeId w = 0; w < table.num_nodes(); ++w) {
      if ((unit.row(v) - unit.row(w)).norm() <= radius) covered.insert(w);
    }
  }
  return static_cast<int>(covered.size());
}

double GraphExplainability(const InfluenceTable& table,
                           const std::set<NodeId>& nodes,
                           const Config& config) {
  if (table.num_nodes() == 0) return 0.0;
  const int influence = InfluenceScore(table, nodes, config.theta);
  const int diversity =
      DiversityScore(table, nodes, config.theta, config.radius);
  return (influence + config.gamma * diversity) / table.num_nodes();
}

double Explainability(std::span<const std::set<NodeId>> node_sets,
                      std::span<const InfluenceTable* const> tables,
                      const Config& config) {
  double total = 0.0;
  for (size_t i = 0; i < node_sets.size(); ++i) {
    total += GraphExplainability(*tables[i], node_sets[i], config);
  }
  return total;
}

ObjectiveIndex::ObjectiveIndex(const InfluenceTable& table,
                               const Config& config)
    : gamma_(config.gamma) {
  const int n = table.num_nodes();
  influences_.resize(n);
  balls_.resize(n);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (table.normalized(u, v) >= config.theta) influences_[u].push_back(v);
    }
  }
  const Eigen::MatrixXd unit = NormalizedRows(table.embeddings);
  for (NodeId v = 0; v < n; ++v) {
    for (NodeId w = 0; w < n; ++w) {
      if ((unit.row(v) - unit.row(w)).norm() <= config.radius) {
        balls_[v].push_back(w);
      }
    }
  }
}

ScoreState::ScoreState(const ObjectiveIndex& index)
    : index_(&index),
      influence_count_(index.num_nodes(), 0),
      ball_count_(index.num_nodes(), 0) {}

void ScoreState::Add(NodeId u) {
  if (!selected_.insert(u).second) return;
  for (NodeId v : index_->influenced_by(u)) {
    if (influence_count_[v]++ > 0) continue;
    ++influence_;
    for (NodeId w : index_->ball(v)) {
      if (ball_count_[w]++ == 0) ++diversity_;
    }
  }
}

void ScoreState::Remove(NodeId u) {
  if (selected_.erase(u) == 0) return;
  for (NodeId v : index_->influenced_by(u)) {
    if (--influence_count_[v] > 0) continue;
    --influence_;
    for (NodeId w : index_->ball(v)) {
      if (--ball_count_[w] == 0) --diversity_;
    }
  }
}

double ScoreState::Value() const {
  const int n = index_->num_nodes();
  if (n == 0) return 0.0;
  return (influence_ + index_->gamma() * diversity_) / n;
}

double ScoreState::Gain(NodeId u) const {
  if (selected_.contains(u)) return 0.0;
  ScoreState next = *this;
  next.Add(u);
  return next.Value() - Value();
}

double ScoreState::Loss(NodeId u) const {
  if (!selected_.contains(u)) return 0.0;
  ScoreState next = *this;
  next.Remove(u);
  return Value() - next.Value();
}

std::set<NodeId> ScoreState::InfluencedNodes() const {
  std::set<NodeId> out;
  for (NodeId v = 0; v < index_->num_nodes(); ++v) {
    if (influence_count_[v] > 0) out.insert(v);
  }
  return out;
}

std::set<NodeId> ScoreState::DiversityUnion() const {
  std::set<NodeId> out;
  for (NodeId v = 0; v < index_->num_nodes(); ++v) {
    if (ball_count_[v] > 0) out.insert(v);
  }
  return out;
}

}  // namespace viewex
