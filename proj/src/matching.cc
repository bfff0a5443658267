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

#include "viewex/matching.h"

#include <algorithm>
#include <array>
#include <tuple>

namespace viewex {
namespace {

// Pattern nodes in search order, each (after the first of its component)
// paired with an earlier neighbor that anchors its candidate list.
struct SearchPlan {
  std::vector<NodeId> order;
  std::vector<NodeId> anchor;  // -1 when the node starts a new component.
};

SearchPlan PlanSearch(const Topology& p) {
  const int n = p.num_nodes();
  SearchPlan plan;
  std::vector<int> links(n, 0);
  std::vector<bool> placed(n, false);
  for (int step = 0; step < n; ++step) {
    NodeId best = -1;
    for (NodeId v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best < 0 ||
          std::make_pair(links[v], p.degree(v)) >
              std::make_pair(links[best], p.degree(best))) {
        best = v;
      }
    }
    placed[best] = true;
    NodeId anchor = -1;
    for (const Neighbor& nb : p.neighbors(best)) {
      ++links[nb.node];
      if (anchor < 0 && placed[nb.node] && nb.node != best) anchor = nb.node;
    }
    plan.order.push_back(best);
    plan.anchor.push_back(anchor);
  }
  return plan;
}

class Matcher {
 public:
  Matcher(const Topology& pattern, const Topology& target,
          const std::function<bool(const Matching&)>& visitor)
      : pattern_(pattern),
        target_(target),
        visitor_(visitor),
        plan_(PlanSearch(pattern)),
        mapping_(pattern.num_nodes(), -1),
        used_(target.num_nodes(), false) {}

  void Run() {
    if (pattern_.num_nodes() == 0 ||
        pattern_.num_nodes() > target_.num_nodes()) {
      return;
    }
    Extend(0);
  }

 private:
  // Returns false when the visitor asked to stop.
  bool Extend(int depth) {
    if (depth == static_cast<int>(plan_.order.size())) {
      return visitor_(mapping_);
    }
    const NodeId p = plan_.order[depth];
    const NodeId anchor = plan_.anchor[depth];
    if (anchor >= 0) {
      for (const Neighbor& nb : target_.neighbors(mapping_[anchor])) {
        if (!TryAssign(depth, p, nb.node)) return false;
      }
    } else {
      for (NodeId v = 0; v < target_.num_nodes(); ++v) {
        if (!TryAssign(depth, p, v)) return false;
      }
    }
    return true;
  }

  bool TryAssign(int depth, NodeId p, NodeId v) {
    if (used_[v] || target_.node_type(v) != pattern_.node_type(p) ||
        target_.degree(v) < pattern_.degree(p)) {
      return true;
    }
    for (int i = 0; i < depth; ++i) {
      const NodeId q = plan_.order[i];
      if (pattern_.edge_type(p, q) != target_.edge_type(v, mapping_[q])) {
        return true;
      }
    }
    mapping_[p] = v;
    used_[v] = true;
    const bool keep_going = Extend(depth + 1);
    used_[v] = false;
    mapping_[p] = -1;
    return keep_going;
  }

  const Topology& pattern_;
  const Topology& target_;
  const std::function<bool(const Matching&)>& visitor_;
  SearchPlan plan_;
  Matching mapping_;
  std::vector<bool> used_;
};

}  // namespace

void ForEachMatch(const Topology& pattern, const Topology& target,
                  const std::function<bool(const Matching&)>& visitor) {
  Matcher(pattern, target, visitor).Run();
}

std::vector<Matching> MatchPattern(const Topology& pattern,
                                   const Topology& target) {
  std::vector<Matching> matches;
  ForEachMatch(pattern, target, [&](const Matching& m) {
    matches.push_back(m);
    return true;
  });
  std::sort(matches.begin(), matches.end());
  return matches;
}

std::vector<Matching> MatchPattern(const Pattern& pattern, const Graph& g) {
  return MatchPattern(pattern.topology(), g.topology());
}

bool HasMatch(const Topology& pattern, const Topology& target) {
  bool found = false;
  ForEachMatch(pattern, target, [&](const Matching&) {
    found = true;
    return false;
  });
  return found;
}

Coverage Covers(std::span<const Pattern> patterns, const Graph& g,
                const std::set<NodeId>& targets) {
  Coverage coverage;
  const Topology& t = g.topology();
  for (const Pattern& p : patterns) {
    const Topology& pt = p.topology();
    ForEachMatch(pt, t, [&](const Matching& m) {
      for (NodeId v : m) {
        if (targets.contains(v)) coverage.nodes.insert(v);
      }
      for (const Edge& e : pt.edges()) {
        const NodeId a = m[e.u];
        const NodeId b = m[e.v];
        if (targets.contains(a) && targets.contains(b)) {
          coverage.edges.insert(*t.edge_index(a, b));
        }
      }
      return true;
    });
  }
  return coverage;
}

Coverage Covers(std::span<const Pattern> patterns, const Topology& g) {
  Coverage coverage;
  for (const Pattern& p : patterns) {
    const Topology& pt = p.topology();
    ForEachMatch(pt, g, [&](const Matching& m) {
      coverage.nodes.insert(m.begin(), m.end());
      for (const Edge& e : pt.edges()) {
        coverage.edges.insert(*g.edge_index(m[e.u], m[e.v]));
      }
      return true;
    });
  }
  return coverage;
}

Topology InducedTopology(const Topology& t, std::span<const NodeId> nodes) {
  std::vector<NodeId> local(t.num_nodes(), -1);
  std::vector<TypeId> types;
  types.reserve(nodes.size());
  for (NodeId v : nodes) {
    local[v] = static_cast<NodeId>(types.size());
    types.push_back(t.node_type(v));
  }
  std::vector<Edge> edges;
  for (NodeId v : nodes) {
    for (const Neighbor& nb : t.neighbors(v)) {
      if (nb.node > v && local[nb.node] >= 0) {
        edges.push_back({local[v], local[nb.node], nb.edge_type});
      }
    }
  }
  return *Topology::Create(std::move(types), std::move(edges));
}

Graph InducedSubgraph(const Graph& g, const std::set<NodeId>& nodes) {
  const std::vector<NodeId> ids(nodes.begin(), nodes.end());
  Eigen::MatrixXd features(ids.size(), g.feature_dim());
  for (size_t i = 0; i < ids.size(); ++i) {
    features.row(i) = g.features().row(ids[i]);
  }
  if (ids.empty()) return Graph::Empty(g.feature_dim());
  return *Graph::Create(InducedTopology(g.topology(), ids),
                        std::move(features), ids);
}

Graph RemoveSubgraph(const Graph& g, const std::set<NodeId>& nodes) {
  std::set<NodeId> kept;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (!nodes.contains(v)) kept.insert(v);
  }
  return InducedSubgraph(g, kept);
}

// Canonical code: the minimum DFS code. The code is grown one edge at a time;
// at every step all DFS traversals that realize the current minimal prefix are
// kept, and the smallest admissible next edge among them is appended.
// Backward edges from the rightmost vertex precede forward edges; forward
// edges from deeper rightmost-path vertices precede shallower ones.
namespace {

struct DfsState {
  std::vector<NodeId> dfs_to_node;
  std::vector<int> node_to_dfs;
  std::vector<bool> edge_used;
  std::vector<int> rightmost_path;  // DFS indices, root first.
};

using DfsEdge = std::array<int32_t, 5>;  // from, to, from_type, edge_type, to_type

}  // namespace

CanonicalCode ComputeCanonicalCode(const Topology& t) {
  const int n = t.num_nodes();
  if (n == 0) return {0};
  if (n == 1) return {1, t.node_type(0)};
  CanonicalCode code = {n, t.num_edges()};

  // First edge: minimal (type_u, edge_type, type_v) over both orientations.
  std::array<int32_t, 3> first = {INT32_MAX, INT32_MAX, INT32_MAX};
  for (const Edge& e : t.edges()) {
    first = std::min(first, {t.node_type(e.u), e.type, t.node_type(e.v)});
    first = std::min(first, {t.node_type(e.v), e.type, t.node_type(e.u)});
  }
  std::vector<DfsState> states;
  for (int i = 0; i < t.num_edges(); ++i) {
    const Edge& e = t.edges()[i];
    for (const auto& [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (std::array<int32_t, 3>{t.node_type(a), e.type, t.node_type(b)} !=
          first) {
        continue;
      }
      DfsState s;
      s.dfs_to_node = {a, b};
      s.node_to_dfs.assign(n, -1);
      s.node_to_dfs[a] = 0;
      s.node_to_dfs[b] = 1;
      s.edge_used.assign(t.num_edges(), false);
      s.edge_used[i] = true;
      s.rightmost_path = {0, 1};
      states.push_back(std::move(s));
    }
  }
  code.insert(code.end(), {0, 1, first[0], first[1], first[2]});

  for (int step = 1; step < t.num_edges(); ++step) {
    // Backward extensions: minimal (to, edge_type).
    std::optional<std::pair<int, int>> best_back;
    for (const DfsState& s : states) {
      const int rm = s.rightmost_path.back();
      const NodeId rm_node = s.dfs_to_node[rm];
      for (const Neighbor& nb : t.neighbors(rm_node)) {
        const int j = s.node_to_dfs[nb.node];
        if (j < 0 || s.edge_used[*t.edge_index(rm_node, nb.node)]) continue;
        const std::pair<int, int> key{j, nb.edge_type};
        if (!best_back || key < *best_back) best_back = key;
      }
    }
    std::vector<DfsState> next;
    if (best_back) {
      const auto [j, etype] = *best_back;
      for (DfsState& s : states) {
        const int rm = s.rightmost_path.back();
        const NodeId a = s.dfs_to_node[rm];
        const NodeId b = s.dfs_to_node[j];
        const std::optional<int> idx = t.edge_index(a, b);
        if (!idx || s.edge_used[*idx] || t.edges()[*idx].type != etype) {
          continue;
        }
        s.edge_used[*idx] = true;
        next.push_back(std::move(s));
      }
      const int rm_index = next.front().rightmost_path.back();
      code.insert(code.end(),
                  {rm_index, j, t.node_type(next.front().dfs_to_node[rm_index]),
                   etype, t.node_type(next.front().dfs_to_node[j])});
    } else {
      // Forward extensions: deepest source first, then (edge_type, to_type).
      int best_depth = -1;
      std::pair<int, int> best_key{INT32_MAX, INT32_MAX};
      for (const DfsState& s : states) {
        for (int d = static_cast<int>(s.rightmost_path.size()) - 1;
             d >= best_depth && d >= 0; --d) {
          const NodeId src = s.dfs_to_node[s.rightmost_path[d]];
          bool any = false;
          for (const Neighbor& nb : t.neighbors(src)) {
            if (s.node_to_dfs[nb.node] >= 0) continue;
            any = true;
            const std::pair<int, int> key{nb.edge_type, t.node_type(nb.node)};
            if (d > best_depth || key < best_key) {
              best_depth = d;
              best_key = key;
            }
          }
          if (any) break;
        }
      }
      const int new_index = static_cast<int>(states.front().dfs_to_node.size());
      int from_index = -1;
      for (const DfsState& s : states) {
        if (best_depth >= static_cast<int>(s.rightmost_path.size())) continue;
        const int src_index = s.rightmost_path[best_depth];
        const NodeId src = s.dfs_to_node[src_index];
        for (const Neighbor& nb : t.neighbors(src)) {
          if (s.node_to_dfs[nb.node] >= 0 ||
              std::pair<int, int>{nb.edge_type, t.node_type(nb.node)} !=
                  best_key) {
            continue;
          }
          DfsState ext = s;
          ext.dfs_to_node.push_back(nb.node);
          ext.node_to_dfs[nb.node] = new_index;
          ext.edge_used[*t.edge_index(src, nb.node)] = true;
          ext.rightmost_path.resize(best_depth + 1);
          ext.rightmost_path.push_back(new_index);
          from_index = src_index;
          next.push_back(std::move(ext));
        }
      }
      const DfsState& any_state = next.front();
      code.insert(code.end(),
                  {from_index, new_index,
                   t.node_type(any_state.dfs_to_node[from_index]),
                   best_key.first, best_key.second});
    }
    states = std::move(next);
  }
  return code;
}

}  // namespace viewex
