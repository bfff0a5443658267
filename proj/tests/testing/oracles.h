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

// Slow, direct reimplementations used as test oracles. Nothing here calls the
// library code under test beyond plain data accessors.

#ifndef VIEWEX_TESTS_TESTING_ORACLES_H_
#define VIEWEX_TESTS_TESTING_ORACLES_H_

#include <optional>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "viewex/gcn.h"
#include "viewex/graph.h"

namespace viewex::testing {

// Every injective map checked against all conditions, sorted.
std::vector<std::vector<NodeId>> BruteForceMatches(const Topology& pattern,
                                                   const Topology& target);

bool BruteIsomorphic(const Topology& a, const Topology& b);

struct DenseResult {
  std::vector<Eigen::MatrixXd> embeddings;  // X^0 .. X^K
  Eigen::VectorXd logits;
  Eigen::VectorXd probabilities;
  int label = 0;
};

// Plain dense forward pass built from the edge list.
DenseResult DenseForward(const GcnModel& model, const Graph& g);

// Subgraph of g on the given nodes (ascending order), built by hand.
Graph DenseInduced(const Graph& g, const std::set<NodeId>& nodes);

bool OracleVerify(const GcnModel& model, const Graph& g,
                  const std::set<NodeId>& nodes, int label);

// raw(v, u) from central differences of the last-layer embeddings.
Eigen::MatrixXd FiniteDifferenceInfluence(const GcnModel& model,
                                          const Graph& g, double step);

// (D^-1/2 (A+I) D^-1/2)^k as a dense matrix.
Eigen::MatrixXd DenseMatrixPower(const Topology& t, int k);

// normalized(u, v) = raw(v, u) / sum_w raw(v, w).
Eigen::MatrixXd OracleNormalize(const Eigen::MatrixXd& raw);

int OracleInfluence(const Eigen::MatrixXd& normalized,
                    const std::set<NodeId>& nodes, double theta);
int OracleDiversity(const Eigen::MatrixXd& normalized,
                    const Eigen::MatrixXd& embeddings,
                    const std::set<NodeId>& nodes, double theta,
                    double radius);
double OracleGraphScore(const Eigen::MatrixXd& normalized,
                        const Eigen::MatrixXd& embeddings,
                        const std::set<NodeId>& nodes, double theta,
                        double radius, double gamma);

struct SubsetOptimum {
  double value = 0.0;
  std::set<NodeId> nodes;
};

// Best score over all node sets with lower <= |S| <= upper that pass
// OracleVerify; nullopt when none does.
std::optional<SubsetOptimum> ExhaustiveOptimum(
    const GcnModel& model, const Graph& g, const Eigen::MatrixXd& normalized,
    const Eigen::MatrixXd& embeddings, int label, int lower, int upper,
    double theta, double radius, double gamma);

// Minimum total weight of sets covering {0 .. universe-1}; nullopt when the
// sets cannot cover it. universe <= 20.
std::optional<double> ExhaustiveMinCover(
    int universe, const std::vector<std::set<int>>& sets,
    const std::vector<double>& weights);

}  // namespace viewex::testing

#endif  // VIEWEX_TESTS_TESTING_ORACLES_H_
