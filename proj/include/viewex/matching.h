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

// Node-induced subgraph isomorphism and the subgraph operations built on it.

#ifndef VIEWEX_MATCHING_H_
#define VIEWEX_MATCHING_H_

#include <functional>
#include <set>
#include <span>
#include <vector>

#include "viewex/graph.h"

namespace viewex {

// matching[p] is the graph node that pattern node p maps to.
using Matching = std::vector<NodeId>;

// Visits every node-induced, type-preserving injective embedding of `pattern`
// into `target`. The visitor returns false to stop the search. Visit order is
// not specified.
void ForEachMatch(const Topology& pattern, const Topology& target,
                  const std::function<bool(const Matching&)>& visitor);

// All matchings, sorted lexicographically.
std::vector<Matching> MatchPattern(const Pattern& pattern, const Graph& g);
std::vector<Matching> MatchPattern(const Topology& pattern,
                                   const Topology& target);

bool HasMatch(const Topology& pattern, const Topology& target);

struct Coverage {
  std::set<NodeId> nodes;
  // Indices into the target's edges().
  std::set<int> edges;
};

// Nodes of `targets` (and edges with both endpoints in `targets`) hit by some
// matching of some pattern.
Coverage Covers(std::span<const Pattern> patterns, const Graph& g,
                const std::set<NodeId>& targets);
Coverage Covers(std::span<const Pattern> patterns, const Topology& g);

// Node-induced subgraph on `nodes` (ids of g). New ids follow ascending order
// of `nodes`; original_ids() maps them back to g's ids.
Graph InducedSubgraph(const Graph& g, const std::set<NodeId>& nodes);
Topology InducedTopology(const Topology& t, std::span<const NodeId> nodes);

// g with `nodes` and their incident edges deleted.
Graph RemoveSubgraph(const Graph& g, const std::set<NodeId>& nodes);

// Minimum DFS code of a connected topology.
CanonicalCode ComputeCanonicalCode(const Topology& t);

}  // namespace viewex

#endif  // VIEWEX_MATCHING_H_
