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

#include "viewex/verifier.h"

#include <gtest/gtest.h>

#include "viewex/explainer.h"
#include "viewex/io/synthetic.h"
#include "viewex/matching.h"
#include "viewex/metrics.h"
#include "viewex/pipeline.h"

namespace viewex {
namespace {

class VerifierTest : public ::testing::TestWithParam<Algorithm> {
 protected:
  void SetUp() override {
    data_ = MakeMotifDataset(10, 12, 8);
    ASSERT_TRUE(AssignLabels(data_.db, model_).ok());
    config_.default_coverage = {1, 6};
    auto build = BuildViews(data_.db, model_, config_, {}, GetParam(), 2);
    ASSERT_TRUE(build.ok()) << build.status();
    build_ = *std::move(build);
    ASSERT_FALSE(build_.views.empty());
  }

  ExplanationView& FirstNonEmpty() {
    for (ExplanationView& v : build_.views) {
      if (!v.subgraphs.empty()) return v;
    }
    ADD_FAILURE() << "no explanations";
    return build_.views[0];
  }

  std::optional<Violation> Check(const ExplanationView& v) {
    return VerifyView(data_.db, model_, config_, v);
  }

  GcnModel model_ = MotifReferenceModel();
  MotifDataset data_;
  Config config_;
  ViewBuild build_;
};

TEST_P(VerifierTest, BuiltViewsPass) {
  int explained = 0;
  for (const ExplanationView& v : build_.views) {
    const auto violation = Check(v);
    EXPECT_FALSE(violation.has_value())
        << ConstraintName(violation->constraint) << ": " << violation->message;
    explained += static_cast<int>(v.subgraphs.size());
  }
  EXPECT_GT(explained, 0);
}

TEST_P(VerifierTest, UncoveredNodeIsCoverageViolation) {
  ExplanationView& v = FirstNonEmpty();
  // Drop one node from every pattern that covers it; patterns shrink to
  // sub-patterns or vanish.
  const ExplanationSubgraph& s = v.subgraphs[0];
  std::vector<Pattern> kept;
  const TypeId victim = s.graph.node_type(0);
  for (const Pattern& p : v.patterns) {
    std::vector<TypeId> types;
    for (TypeId t : p.topology().node_types()) {
      if (t != victim) types.push_back(t);
    }
    if (types.size() == p.topology().node_types().size()) kept.push_back(p);
  }
  v.patterns = kept;
  const auto violation = Check(v);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->constraint, ViewConstraint::kCoverage);
}

TEST_P(VerifierTest, SizeOutsideWindowIsCoverageViolation) {
  ExplanationView& v = FirstNonEmpty();
  config_.coverage[v.label] = {
      static_cast<int>(v.subgraphs[0].nodes.size()) + 1, 20};
  const auto violation = Check(v);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->constraint, ViewConstraint::kCoverage);
}

TEST_P(VerifierTest, LabelFlipIsExplanationViolation) {
  ExplanationView& v = FirstNonEmpty();
  const ClassLabel flipped = v.label == kHouseClass ? kCycleClass : kHouseClass;
  v.label = flipped;
  for (ExplanationSubgraph& s : v.subgraphs) s.label = flipped;
  const auto violation = Check(v);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->constraint, ViewConstraint::kExplanation);
}

TEST_P(VerifierTest, MismatchedStructureIsGraphViewViolation) {
  ExplanationView& v = FirstNonEmpty();
  ExplanationSubgraph& s = v.subgraphs[0];
  // The stored structure disagrees with the source graph on a node type.
  std::vector<TypeId> types = s.graph.topology().node_types();
  types[0] = types[0] == kBaseNode ? kMotifBody : kBaseNode;
  s.graph = *Graph::Create(types, s.graph.features(), s.graph.edges(),
                           s.graph.original_ids());
  const auto violation = Check(v);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->constraint, ViewConstraint::kGraphView);
}

TEST_P(VerifierTest, UnknownSourceGraphIsGraphViewViolation) {
  ExplanationView& v = FirstNonEmpty();
  v.subgraphs[0].source_graph = data_.db.size();
  const auto violation = Check(v);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->constraint, ViewConstraint::kGraphView);
}

TEST_P(VerifierTest, NonCounterfactualSubgraphIsExplanationViolation) {
  ExplanationView& v = FirstNonEmpty();
  ExplanationSubgraph& s = v.subgraphs[0];
  const Graph& g = data_.db.graph(s.source_graph);
  // Without its anchor the subgraph no longer keeps the label.
  std::set<NodeId> nodes;
  for (NodeId u : s.nodes) {
    if (g.node_type(u) != kHouseAnchor && g.node_type(u) != kCycleAnchor) {
      nodes.insert(u);
    }
  }
  if (nodes.empty()) nodes.insert(s.nodes.size() == 1 ? 0 : *s.nodes.rbegin());
  s = MakeExplanation(s.source_graph, g, nodes, v.label);
  const auto violation = Check(v);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(violation->constraint, ViewConstraint::kExplanation);
}

TEST_P(VerifierTest, WorkerCountDoesNotChangeViews) {
  auto one = BuildViews(data_.db, model_, config_, {}, GetParam(), 1);
  auto four = BuildViews(data_.db, model_, config_, {}, GetParam(), 4);
  ASSERT_TRUE(one.ok() && four.ok());
  ASSERT_EQ(one->views.size(), four->views.size());
  for (size_t i = 0; i < one->views.size(); ++i) {
    EXPECT_EQ(one->views[i].patterns, four->views[i].patterns);
    ASSERT_EQ(one->views[i].subgraphs.size(), four->views[i].subgraphs.size());
    for (size_t k = 0; k < one->views[i].subgraphs.size(); ++k) {
      EXPECT_EQ(one->views[i].subgraphs[k].nodes,
                four->views[i].subgraphs[k].nodes);
    }
  }
  EXPECT_EQ(one->uncovered, four->uncovered);
}

INSTANTIATE_TEST_SUITE_P(Algorithms, VerifierTest,
                         ::testing::Values(Algorithm::kApprox,
                                           Algorithm::kStream),
                         [](const auto& info) {
                           return info.param == Algorithm::kApprox
                                      ? std::string("Approx")
                                      : std::string("Stream");
                         });

TEST(BuildViewsTest, RequiresAssignedLabels) {
  const MotifDataset data = MakeMotifDataset(2, 6, 1);
  EXPECT_FALSE(BuildViews(data.db, MotifReferenceModel(), Config{}, {},
                          Algorithm::kApprox)
                   .ok());
}

TEST(BuildViewsTest, ExplicitLabelsSelectViews) {
  MotifDataset data = MakeMotifDataset(4, 8, 1);
  const GcnModel m = MotifReferenceModel();
  ASSERT_TRUE(AssignLabels(data.db, m).ok());
  auto build =
      BuildViews(data.db, m, Config{}, {kCycleClass}, Algorithm::kApprox);
  ASSERT_TRUE(build.ok());
  ASSERT_EQ(build->views.size(), 1u);
  EXPECT_EQ(build->views[0].label, kCycleClass);
  for (const ExplanationSubgraph& s : build->views[0].subgraphs) {
    EXPECT_EQ(s.source_graph % 2, 1);
  }
}

}  // namespace
}  // namespace viewex
