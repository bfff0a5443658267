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

// Random instances for property tests.

#ifndef VIEWEX_TESTS_TESTING_GENERATORS_H_
#define VIEWEX_TESTS_TESTING_GENERATORS_H_

#include <random>
#include <vector>

#include "viewex/config.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"

namespace viewex::testing {

using Rng = std::mt19937_64;

// G(n, p) with uniformly drawn node types in [0, num_types) and one-hot type
// features (feature_dim >= num_types) plus optional gaussian noise.
Graph RandomGraph(Rng& rng, int n, double edge_prob, int num_types,
                  int feature_dim, double noise = 0.0);

// Connected graph on n nodes: random spanning tree plus extra G(n, p) edges.
Graph RandomConnectedGraph(Rng& rng, int n, double edge_prob, int num_types,
                           int feature_dim, double noise = 0.0);

// Random connected pattern with up to max_nodes nodes.
Pattern RandomPattern(Rng& rng, int max_nodes, double edge_prob,
                      int num_types);

// 3-layer model with gaussian weights.
GcnModel RandomModel(Rng& rng, const std::vector<int>& dims, int num_classes,
                     double scale = 1.0);

// Small explanation problem: a graph, a model that labels it, the label and
// a configuration.
struct SmallInstance {
  Graph graph;
  GcnModel model;
  ClassLabel label = 0;
  Config config;
};

// Anchor-keyed instances: graphs of 5..max_nodes nodes built from base and
// body nodes plus one anchor node of the label's kind (and sometimes one of
// the other kind), classified by a motif-style model with random positive
// layer scales, classifier scale and background bias. theta, radius, gamma
// and the size window (upper <= max_upper) are random.
SmallInstance AnchoredInstance(Rng& rng, int max_nodes, int max_upper);

// Same shape of problem with a random-weight model on random graphs; the
// label is whatever the model predicts.
SmallInstance RandomWeightInstance(Rng& rng, int max_nodes, int max_upper);

}  // namespace viewex::testing

#endif  // VIEWEX_TESTS_TESTING_GENERATORS_H_
