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

// Independent checker for explanation views.
//
// C1 (graph view): every explanation subgraph names a graph of the database,
//   is the node-induced subgraph of that graph on its node set and carries
//   the view's label; every pattern is non-empty.
// C2 (explanation): the model labels each source graph with the view's label,
//   the subgraph alone keeps that label and the source graph minus the
//   subgraph loses it.
// C3 (coverage): each subgraph has between b_l and u_l nodes, and the
//   patterns cover every node of every subgraph.
// Checks run in that order; the first violation is reported.

#ifndef VIEWEX_VERIFIER_H_
#define VIEWEX_VERIFIER_H_

#include <optional>
#include <string>

#include "viewex/config.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"
#include "viewex/summarizer.h"

namespace viewex {

enum class ViewConstraint { kGraphView, kExplanation, kCoverage };

// "C1", "C2" or "C3".
const char* ConstraintName(ViewConstraint c);

struct Violation {
  ViewConstraint constraint;
  std::string message;
};

std::optional<Violation> VerifyView(const GraphDatabase& db,
                                    const GcnModel& model,
                                    const Config& config,
                                    const ExplanationView& view);

}  // namespace viewex

#endif  // VIEWEX_VERIFIER_H_
