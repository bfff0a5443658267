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

#include "viewex/gcn.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_format.h"
#include "viewex/matching.h"

namespace viewex {

absl::StatusOr<GcnModel> GcnModel::Create(std::vector<Eigen::MatrixXd> layers,
                                          Eigen::MatrixXd classifier_weight,
                                          Eigen::VectorXd classifier_bias) {
  if (layers.empty()) {
    return absl::InvalidArgumentError("model needs at least one layer");
  }
  for (size_t k = 0; k < layers.size(); ++k) {
    if (layers[k].rows() == 0 || layers[k].cols() == 0) {
      return absl::InvalidArgumentError(
          absl::StrFormat("layer %d has an empty dimension", k));
    }
    if (k > 0 && layers[k].rows() != layers[k - 1].cols()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "layer %d expects %d inputs but layer %d produces %d", k,
          layers[k].rows(), k - 1, layers[k - 1].cols()));
    }
    if (!layers[k].allFinite()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("layer %d has non-finite weights", k));
    }
  }
  if (classifier_weight.rows() != layers.back().cols()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "classifier expects %d inputs but the last layer produces %d",
        classifier_weight.rows(), layers.back().cols()));
  }
  if (classifier_weight.cols() != classifier_bias.size()) {
    return absl::InvalidArgumentError("classifier weight/bias size mismatch");
  }
  if (classifier_bias.size() < 2) {
    return absl::InvalidArgumentError("a classifier needs at least 2 classes");
  }
  if (!classifier_weight.allFinite() || !classifier_bias.allFinite()) {
    return absl::InvalidArgumentError("classifier has non-finite weights");
  }
  GcnModel m;
  m.layers_ = std::move(layers);
  m.weight_ = std::move(classifier_weight);
  m.bias_ = std::move(classifier_bias);
  return m;
}

Eigen::SparseMatrix<double> NormalizedAdjacency(const Topology& t) {
  const int n = t.num_nodes();
  std::vector<double> inv_sqrt(n);
  for (NodeId v = 0; v < n; ++v) inv_sqrt[v] = 1.0 / std::sqrt(t.degree(v) + 1.0);
  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(n + 2 * t.num_edges());
  for (NodeId v = 0; v < n; ++v) {
    entries.emplace_back(v, v, inv_sqrt[v] * inv_sqrt[v]);
    for (const Neighbor& nb : t.neighbors(v)) {
      entries.emplace_back(v, nb.node, inv_sqrt[v] * inv_sqrt[nb.node]);
    }
  }
  Eigen::SparseMatrix<double> s(n, n);
  s.setFromTriplets(entries.begin(), entries.end());
  return s;
}

ClassLabel ArgMax(const Eigen::VectorXd& values) {
  ClassLabel best = 0;
  for (int i = 1; i < values.size(); ++i) {
    if (values[i] > values[best]) best = i;
  }
  return best;
}

Eigen::VectorXd Softmax(const Eigen::VectorXd& logits) {
  const Eigen::VectorXd shifted =
      (logits.array() - logits.maxCoeff()).exp().matrix();
  return shifted / shifted.sum();
}

absl::StatusOr<InferenceResult> Forward(const GcnModel& model, const Graph& g) {
  if (g.feature_dim() != model.feature_dim()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("graph has %d-dimensional features, model expects %d",
                        g.feature_dim(), model.feature_dim()));
  }
  InferenceResult result;
  result.embeddings.push_back(g.features());
  const Eigen::SparseMatrix<double> s = NormalizedAdjacency(g.topology());
  for (const Eigen::MatrixXd& theta : model.layers()) {
    Eigen::MatrixXd z = s * (result.embeddings.back() * theta);
    result.embeddings.push_back(z.cwiseMax(0.0));
    result.pre_activations.push_back(std::move(z));
  }
  const Eigen::MatrixXd& last = result.embeddings.back();
  result.pooled = g.empty() ? Eigen::VectorXd::Zero(model.embedding_dim())
                            : Eigen::VectorXd(last.colwise().maxCoeff());
  result.logits = model.classifier_weight().transpose() * result.pooled +
                  model.classifier_bias();
  result.probabilities = Softmax(result.logits);
  result.label = ArgMax(result.logits);
  return result;
}

ClassLabel Predict(const GcnModel& model, const Graph& g) {
  return Forward(model, g)->label;
}

bool VerifyExplanation(const GcnModel& model, const Graph& g,
                       const std::set<NodeId>& nodes, ClassLabel label) {
  if (nodes.empty()) return false;
  if (Predict(model, InducedSubgraph(g, nodes)) != label) return false;
  return Predict(model, RemoveSubgraph(g, nodes)) != label;
}

}  // namespace viewex
