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

// Fixed, pretrained GCN graph classifier.
//
// Each layer computes X' = relu(S X W) with S = D^-1/2 (A + I) D^-1/2, the
// symmetric normalization of the adjacency matrix with self-loops. Node
// embeddings of the last layer are max-pooled and fed to a linear classifier.

#ifndef VIEWEX_GCN_H_
#define VIEWEX_GCN_H_

#include <set>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "absl/status/statusor.h"
#include "viewex/graph.h"

namespace viewex {

class GcnModel {
 public:
  GcnModel() = default;

  // `layers[k]` is D_k x D_{k+1}; `classifier_weight` is D_last x t.
  static absl::StatusOr<GcnModel> Create(std::vector<Eigen::MatrixXd> layers,
                                         Eigen::MatrixXd classifier_weight,
                                         Eigen::VectorXd classifier_bias);

  int feature_dim() const { return static_cast<int>(layers_.front().rows()); }
  int num_classes() const { return static_cast<int>(bias_.size()); }
  int num_layers() const { return static_cast<int>(layers_.size()); }
  int embedding_dim() const { return static_cast<int>(layers_.back().cols()); }

  const std::vector<Eigen::MatrixXd>& layers() const { return layers_; }
  const Eigen::MatrixXd& classifier_weight() const { return weight_; }
  const Eigen::VectorXd& classifier_bias() const { return bias_; }

  friend bool operator==(const GcnModel& a, const GcnModel& b) {
    return a.layers_ == b.layers_ && a.weight_ == b.weight_ &&
           a.bias_ == b.bias_;
  }

 private:
  std::vector<Eigen::MatrixXd> layers_;
  Eigen::MatrixXd weight_;
  Eigen::VectorXd bias_;
};

struct InferenceResult {
  // embeddings[0] is the input feature matrix; embeddings[k] the output of
  // layer k.
  std::vector<Eigen::MatrixXd> embeddings;
  // Pre-activations of every layer (embeddings[k] = relu(pre_activations[k-1])).
  std::vector<Eigen::MatrixXd> pre_activations;
  Eigen::VectorXd pooled;
  Eigen::VectorXd logits;
  Eigen::VectorXd probabilities;
  ClassLabel label = 0;
};

// D^-1/2 (A + I) D^-1/2.
Eigen::SparseMatrix<double> NormalizedAdjacency(const Topology& t);

// An empty graph pools to the zero vector, so its label is argmax(bias).
absl::StatusOr<InferenceResult> Forward(const GcnModel& model, const Graph& g);

// Label only; the graph is assumed to match the model's feature dimension.
ClassLabel Predict(const GcnModel& model, const Graph& g);

// Argmax, ties toward the smaller index.
ClassLabel ArgMax(const Eigen::VectorXd& values);

Eigen::VectorXd Softmax(const Eigen::VectorXd& logits);

// True iff the subgraph induced by `nodes` is classified `label` and the rest
// of the graph is not. An empty node set never verifies.
bool VerifyExplanation(const GcnModel& model, const Graph& g,
                       const std::set<NodeId>& nodes, ClassLabel label);

}  // namespace viewex

#endif  // VIEWEX_GCN_H_
