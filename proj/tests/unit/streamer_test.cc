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

#include "viewex/streamer.h"

#include <gtest/gtest.h>

#include "testing/generators.h"
#include "testing/oracles.h"
#include "viewex/io/synthetic.h"
#include "viewex/matching.h"
#include "viewex/scoring.h"

namespace viewex {
namespace {

std::vector<Neighbor> Back(const Graph& g, NodeId v) {
  std::vector<Neighbor> back;
  for (const Neighbor& nb : g.neighbors(v)) {
    if (nb.node < v) back.push_back(nb);
  }
  return back;
}

absl::Status Feed(StreamExplainer& s, const Graph& g, NodeId v) {
  return s.Step(v, g.node_type(v), g.features().row(v).transpose(),
                Back(g, v));
}

Graph Typed(const std::vector<TypeId>& types, const std::vector<Edge>& edges) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(types.size(), kMotifFeatureDim);
  for (size_t i = 0; i < types.size(); ++i) x(i, types[i]) = 1.0;
  return *Graph::Create(types, x, edges);
}

bool CacheCoversSelection(const StreamExplainer& s) {
  const Graph sub = InducedSubgraph(s.graph(), s.selected());
  return static_cast<int>(Covers(s.patterns(), sub.topology()).nodes.size()) ==
         sub.num_nodes();
}

TEST(StreamStepTest, BiasDominatedModelRejectsFirstNode) {
  std::vector<Eigen::MatrixXd> layers(
      3, Eigen::MatrixXd::Identity(kMotifFeatureDim, kMotifFeatureDim));
  const GcnModel m = *GcnModel::Create(
      layers, Eigen::MatrixXd::Zero(kMotifFeatureDim, 2),
      Eigen::Vector2d(1.0, 0.0));
  const MotifDataset data = MakeMotifDataset(1, 6, 1);
  StreamExplainer s(m, Config{}, 0);
  ASSERT_TRUE(Feed(s, data.db.graph(0), 0).ok());
  EXPECT_EQ(s.last_decision(), StreamDecision::kRejected);
  EXPECT_TRUE(s.selected().empty());
  EXPECT_TRUE(s.reservoir().contains(0));
}

TEST(StreamStepTest, RejectsDuplicateAndOutOfOrderNodes) {
  const GcnModel m = MotifReferenceModel();
  const MotifDataset data = MakeMotifDataset(1, 6, 1);
  StreamExplainer s(m, Config{}, kHouseClass);
  ASSERT_TRUE(Feed(s, data.db.graph(0), 0).ok());
  EXPECT_EQ(Feed(s, data.db.graph(0), 0).code(),
            absl::StatusCode::kAlreadyExists);
  EXPECT_FALSE(Feed(s, data.db.graph(0), 2).ok());
}

TEST(StreamStepTest, AddsWhileThereIsRoom) {
  const GcnModel m = MotifReferenceModel();
  // Anchor first, then a neighbor: both fit under u_l = 3.
  const Graph g = Typed({kHouseAnchor, kMotifBody, kBaseNode}, {{0, 1}, {1, 2}});
  Config c;
  c.default_coverage = {0, 3};
  StreamExplainer s(m, c, kHouseClass);
  ASSERT_TRUE(Feed(s, g, 0).ok());
  EXPECT_EQ(s.last_decision(), StreamDecision::kAdded);
  ASSERT_TRUE(Feed(s, g, 1).ok());
  EXPECT_EQ(s.last_decision(), StreamDecision::kAdded);
  EXPECT_EQ(s.selected(), (std::set<NodeId>{0, 1}));
  EXPECT_TRUE(CacheCoversSelection(s));
}

TEST(StreamStepTest, ZeroGainNeverSwaps) {
  const GcnModel m = MotifReferenceModel();
  // Two far apart components; the second node influences nothing above
  // theta that the anchor does not already reach.
  const Graph g = Typed({kHouseAnchor, kBaseNode}, {});
  Config c;
  c.default_coverage = {0, 1};
  c.theta = 0.9;
  c.radius = 0.0;
  StreamExplainer s(m, c, kHouseClass);
  ASSERT_TRUE(Feed(s, g, 0).ok());
  ASSERT_TRUE(Feed(s, g, 1).ok());
  EXPECT_NE(s.last_decision(), StreamDecision::kSwapped);
  EXPECT_EQ(s.selected(), (std::set<NodeId>{0}));
}

TEST(StreamStepTest, SymmetricCandidatesDoNotSwap) {
  // An anchor with two mirrored body nodes; the cache is full after the
  // first body node arrives.
  const GcnModel m = MotifReferenceModel();
  const Graph h = Typed({kHouseAnchor, kMotifBody, kMotifBody},
                        {{0, 1}, {0, 2}});
  Config c;
  c.default_coverage = {0, 2};
  StreamExplainer s(m, c, kHouseClass);
  for (NodeId v = 0; v < 3; ++v) ASSERT_TRUE(Feed(s, h, v).ok());
  // Node 2 mirrors node 1: its gain equals the loss of the cached body node,
  // short of twice as much.
  EXPECT_NE(s.last_decision(), StreamDecision::kSwapped);
  EXPECT_EQ(s.selected(), (std::set<NodeId>{0, 1}));
}

TEST(StreamStepTest, InvariantsAndMonotoneValueOnRandomStreams) {
  testing::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const testing::SmallInstance inst = testing::AnchoredInstance(rng, 12, 4);
    Config c = inst.config;
    if (trial % 3 == 0) c.pattern_cache_capacity = 2;
    StreamExplainer s(inst.model, c, inst.label);
    for (NodeId v = 0; v < inst.graph.num_nodes(); ++v) {
      std::set<NodeId> before = s.selected();
      ASSERT_TRUE(Feed(s, inst.graph, v).ok());
      EXPECT_LE(static_cast<int>(s.selected().size()),
                c.bounds(inst.label).upper);
      EXPECT_TRUE(CacheCoversSelection(s)) << "trial " << trial << " node " << v;
      EXPECT_GE(s.Value() + 1e-12,
                GraphExplainability(s.table(), before, c));
    }
  }
}

TEST(StreamStepTest, ReplayIsDeterministic) {
  testing::Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const testing::SmallInstance inst = testing::AnchoredInstance(rng, 12, 4);
    auto a = StreamGraph(inst.model, inst.graph, 0, inst.config, inst.label);
    auto b = StreamGraph(inst.model, inst.graph, 0, inst.config, inst.label);
    ASSERT_TRUE(a.ok() && b.ok());
    ASSERT_EQ(a->has_value(), b->has_value());
    if (!a->has_value()) continue;
    EXPECT_EQ((*a)->subgraph.nodes, (*b)->subgraph.nodes);
    ASSERT_EQ((*a)->patterns.size(), (*b)->patterns.size());
    for (size_t i = 0; i < (*a)->patterns.size(); ++i) {
      EXPECT_EQ((*a)->patterns[i], (*b)->patterns[i]);
    }
  }
}

Graph PathOfTypes(const std::vector<TypeId>& types) {
  std::vector<Edge> edges;
  for (size_t i = 1; i < types.size(); ++i) {
    edges.push_back({static_cast<NodeId>(i - 1), static_cast<NodeId>(i)});
  }
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(types.size(), kMotifFeatureDim);
  for (size_t i = 0; i < types.size(); ++i) x(i, types[i]) = 1.0;
  return *Graph::Create(types, x, edges);
}

StreamExplainer Loaded(const GcnModel& m, const Graph& g, const Config& c) {
  StreamExplainer s(m, c, kHouseClass);
  for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_TRUE(Feed(s, g, v).ok());
  return s;
}

TEST(UpdatePatternsTest, EmptyCacheGetsComponents) {
  const GcnModel m = MotifReferenceModel();
  const Graph g = PathOfTypes({kHouseAnchor, kMotifBody, kBaseNode, kMotifBody,
                               kMotifBody});
  StreamExplainer s = Loaded(m, g, Config{});
  s.SetCacheForTesting({0, 1, 3, 4}, {});
  s.UpdatePatterns();
  ASSERT_EQ(s.patterns().size(), 2u);
  EXPECT_EQ(s.patterns()[0], *Pattern::Create({kHouseAnchor, kMotifBody},
                                              {{0, 1}}));
  EXPECT_EQ(s.patterns()[1], *Pattern::Create({kMotifBody, kMotifBody},
                                              {{0, 1}}));
  EXPECT_TRUE(CacheCoversSelection(s));
}

TEST(UpdatePatternsTest, CoveredSelectionKeepsCache) {
  const GcnModel m = MotifReferenceModel();
  const Graph g = PathOfTypes({kHouseAnchor, kMotifBody, kMotifBody});
  StreamExplainer s = Loaded(m, g, Config{});
  const std::vector<Pattern> cache = {
      *Pattern::Create({kHouseAnchor, kMotifBody}, {{0, 1}}),
      *Pattern::Create({kMotifBody, kMotifBody}, {{0, 1}}),
      Pattern::Singleton(kCycleAnchor)};
  s.SetCacheForTesting({0, 1, 2}, cache);
  s.UpdatePatterns();
  EXPECT_EQ(s.patterns(), cache);
}

TEST(UpdatePatternsTest, EvictsUnusedOnlyAboveCapacity) {
  const GcnModel m = MotifReferenceModel();
  const Graph g = PathOfTypes({kHouseAnchor, kMotifBody, kMotifBody});
  Config c;
  c.pattern_cache_capacity = 2;
  StreamExplainer s = Loaded(m, g, c);
  s.SetCacheForTesting(
      {0, 1, 2},
      {*Pattern::Create({kHouseAnchor, kMotifBody, kMotifBody},
                        {{0, 1}, {1, 2}}),
       Pattern::Singleton(kCycleAnchor), Pattern::Singleton(kBaseNode)});
  s.UpdatePatterns();
  ASSERT_EQ(s.patterns().size(), 2u);
  EXPECT_EQ(s.patterns()[0].num_nodes(), 3);
}

TEST(UpdatePatternsTest, NewPatternForUncoveredRemainder) {
  // Cached patterns cover the head of the selection; the uncovered tail
  // becomes one new pattern.
  const GcnModel m = MotifReferenceModel();
  const Graph g = PathOfTypes({kHouseAnchor, kMotifBody, kBaseNode, kBaseNode,
                               kBaseNode});
  StreamExplainer s = Loaded(m, g, Config{});
  const Pattern head = *Pattern::Create({kHouseAnchor, kMotifBody}, {{0, 1}});
  s.SetCacheForTesting({0, 1, 2, 3, 4}, {head});
  s.UpdatePatterns();
  ASSERT_EQ(s.patterns().size(), 2u);
  EXPECT_EQ(s.patterns()[0], head);
  EXPECT_EQ(s.patterns()[1],
            *Pattern::Create({kBaseNode, kBaseNode, kBaseNode},
                             {{0, 1}, {1, 2}}));
  EXPECT_TRUE(CacheCoversSelection(s));
}

TEST(StreamFinishTest, ZeroLowerBoundReturnsView) {
  const MotifDataset data = MakeMotifDataset(2, 10, 4);
  const GcnModel m = MotifReferenceModel();
  Config c;
  c.default_coverage = {0, 4};
  for (GraphId i = 0; i < 2; ++i) {
    auto r = StreamGraph(m, data.db.graph(i), i, c, data.classes[i]);
    ASSERT_TRUE(r.ok());
    ASSERT_TRUE(r->has_value());
    const ExplanationSubgraph& sub = (*r)->subgraph;
    EXPECT_TRUE(
        testing::OracleVerify(m, data.db.graph(i), sub.nodes, sub.label));
    EXPECT_LE(sub.nodes.size(), 4u);
    EXPECT_EQ(static_cast<int>(Covers((*r)->patterns, sub.graph.topology())
                                   .nodes.size()),
              sub.graph.num_nodes());
  }
}

TEST(StreamFinishTest, UnreachableLowerBoundGivesNone) {
  const MotifDataset data = MakeMotifDataset(1, 6, 4);
  const GcnModel m = MotifReferenceModel();
  Config c;
  const int n = data.db.graph(0).num_nodes();
  c.default_coverage = {n + 1, n + 1};
  auto r = StreamGraph(m, data.db.graph(0), 0, c, kHouseClass);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->has_value());
}

TEST(StreamFinishTest, QuarterOfPrefixOptimum) {
  testing::Rng rng(61);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const testing::SmallInstance inst = testing::AnchoredInstance(rng, 10, 4);
    const Config& c = inst.config;
    const CoverageBound b = c.bounds(inst.label);
    StreamExplainer s(inst.model, c, inst.label);
    for (NodeId v = 0; v < inst.graph.num_nodes(); ++v) {
      ASSERT_TRUE(Feed(s, inst.graph, v).ok());
      const auto best = testing::ExhaustiveOptimum(
          inst.model, s.graph(), s.table().normalized, s.table().embeddings,
          inst.label, b.lower, b.upper, c.theta, c.radius, c.gamma);
      if (!best.has_value()) continue;
      ++checked;
      const auto view = s.Finish();
      ASSERT_TRUE(view.has_value()) << "trial " << trial << " prefix " << v;
      EXPECT_GE(GraphExplainability(s.table(), view->subgraph.nodes, c),
                0.25 * best->value)
          << "trial " << trial << " prefix " << v;
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace
}  // namespace viewex
