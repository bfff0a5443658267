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

#include "viewex/io/synthetic.h"

#include <random>

namespace viewex {
namespace {

// Portable draw in [0, n).
int Draw(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<uint64_t>(n));
}

// Preferential attachment with one edge per new node.
std::vector<Edge> BarabasiAlbert(std::mt19937_64& rng, int n) {
  std::vector<Edge> edges = {{0, 1}};
  std::vector<NodeId> ends = {0, 1};
  for (NodeId v = 2; v < n; ++v) {
    const NodeId target = ends[Draw(rng, static_cast<int>(ends.size()))];
    edges.push_back({target, v});
    ends.push_back(target);
    ends.push_back(v);
  }
  return edges;
}

}  // namespace

MotifDataset MakeMotifDataset(int num_graphs, int base_nodes, uint64_t seed) {
  std::mt19937_64 rng(seed);
  MotifDataset out;
  std::vector<Graph> graphs;
  for (int i = 0; i < num_graphs; ++i) {
    const bool house = i % 2 == 0;
    std::vector<Edge> edges = BarabasiAlbert(rng, base_nodes);
    std::vector<TypeId> types(base_nodes, kBaseNode);
    const NodeId m = base_nodes;
    std::set<NodeId> motif;
    NodeId bridge_end;
    if (house) {
      // Square m..m+3, roof apex m+4 on top of m and m+1.
      for (int k = 0; k < 4; ++k) edges.push_back({m + k, m + (k + 1) % 4});
      edges.push_back({m, m + 4});
      edges.push_back({m + 1, m + 4});
      types.insert(types.end(), {kMotifBody, kMotifBody, kMotifBody,
                                 kMotifBody, kHouseAnchor});
      bridge_end = m + 2;
      for (int k = 0; k < 5; ++k) motif.insert(m + k);
    } else {
      for (int k = 0; k < 6; ++k) edges.push_back({m + k, m + (k + 1) % 6});
      types.insert(types.end(), {kCycleAnchor, kMotifBody, kMotifBody,
                                 kMotifBody, kMotifBody, kMotifBody});
      bridge_end = m + 3;
      for (int k = 0; k < 6; ++k) motif.insert(m + k);
    }
    edges.push_back({Draw(rng, base_nodes), bridge_end});
    const int n = static_cast<int>(types.size());
    Eigen::MatrixXd features = Eigen::MatrixXd::Zero(n, kMotifFeatureDim);
    for (NodeId v = 0; v < n; ++v) features(v, types[v]) = 1.0;
    graphs.push_back(*Graph::Create(std::move(types), std::move(features),
                                    std::move(edges)));
    out.classes.push_back(house ? kHouseClass : kCycleClass);
    out.motifs.push_back(std::move(motif));
  }
  out.db = GraphDatabase(std::move(graphs));
  return out;
}

GcnModel MotifReferenceModel(double scale, double background) {
  const Eigen::MatrixXd identity =
      Eigen::MatrixXd::Identity(kMotifFeatureDim, kMotifFeatureDim);
  Eigen::MatrixXd weight = Eigen::MatrixXd::Zero(kMotifFeatureDim, 3);
  weight(kHouseAnchor, kHouseClass) = scale;
  weight(kCycleAnchor, kCycleClass) = scale;
  Eigen::VectorXd bias = Eigen::VectorXd::Zero(3);
  bias[kBackgroundClass] = background;
  return *GcnModel::Create({identity, identity, identity}, weight, bias);
}

}  // namespace viewex
