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

// Synthetic motif benchmark: Barabasi-Albert base graphs with one planted
// house (5 nodes) or cycle (6 nodes) motif, and a hand-built classifier that
// detects the motifs.
//
// Node types: base nodes, one anchor node per motif (the roof apex of a
// house, a fixed ring node of a cycle) and the remaining motif body nodes.
// Features are one-hot node types. The class of a graph is its motif kind.

#ifndef VIEWEX_IO_SYNTHETIC_H_
#define VIEWEX_IO_SYNTHETIC_H_

#include <cstdint>
#include <set>
#include <vector>

#include "viewex/gcn.h"
#include "viewex/graph.h"

namespace viewex {

inline constexpr TypeId kBaseNode = 0;
inline constexpr TypeId kHouseAnchor = 1;
inline constexpr TypeId kCycleAnchor = 2;
inline constexpr TypeId kMotifBody = 3;
inline constexpr int kMotifFeatureDim = 4;

inline constexpr ClassLabel kHouseClass = 0;
inline constexpr ClassLabel kCycleClass = 1;
// Predicted by the reference model when no anchor is present.
inline constexpr ClassLabel kBackgroundClass = 2;

struct MotifDataset {
  GraphDatabase db;
  // Planted class of each graph (even ids: house, odd ids: cycle).
  std::vector<ClassLabel> classes;
  // Planted motif node ids of each graph.
  std::vector<std::set<NodeId>> motifs;
};

// Deterministic for a given seed on every platform. base_nodes >= 5.
MotifDataset MakeMotifDataset(int num_graphs, int base_nodes, uint64_t seed);

// Three identity propagation layers over the one-hot types; logits are
// scale * (pooled house anchor signal, pooled cycle anchor signal) and a
// constant background logit.
GcnModel MotifReferenceModel(double scale = 10.0, double background = 0.05);

}  // namespace viewex

#endif  // VIEWEX_IO_SYNTHETIC_H_
