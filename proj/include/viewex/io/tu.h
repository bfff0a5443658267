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

// TU graph-classification text format.
//
// A dataset NAME in directory DIR consists of:
//   NAME_A.txt                 "i, j" per line: an edge between nodes i and j
//   NAME_graph_indicator.txt   graph id of node i on line i
//   NAME_graph_labels.txt      class of graph g on line g
//   NAME_node_labels.txt       optional; node type of node i on line i
//   NAME_edge_labels.txt       optional; edge type of line k of NAME_A.txt
//   NAME_node_attributes.txt   optional; comma-separated features of node i
// Node and graph ids are 1-based and global across the dataset; they become
// 0-based, per-graph dense ids on load. Node and edge labels must be
// non-negative and are used as type ids unchanged. Without attributes the
// features are the one-hot node types (width = largest type + 1), or a
// single constant 1 when node labels are absent as well. An edge listed in
// both directions is stored once.
//
// The synthetic motif generator additionally writes NAME_motifs.txt: the
// planted motif of graph g on line g, as comma-separated 0-based node ids
// local to that graph.

#ifndef VIEWEX_IO_TU_H_
#define VIEWEX_IO_TU_H_

#include <filesystem>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "viewex/graph.h"

namespace viewex {

struct TuDataset {
  GraphDatabase db;
  // Ground-truth classes from NAME_graph_labels.txt.
  std::vector<int> graph_labels;
};

absl::StatusOr<TuDataset> LoadTuDataset(const std::filesystem::path& dir,
                                        const std::string& name);

// Writes node labels, and edge labels when any edge carries a non-default
// type. Features are written as attributes with round-trip precision.
absl::Status SaveTuDataset(const std::filesystem::path& dir,
                           const std::string& name, const GraphDatabase& db,
                           std::span<const int> graph_labels);

absl::Status SaveMotifTruth(const std::filesystem::path& path,
                            std::span<const std::set<NodeId>> motifs);
absl::StatusOr<std::vector<std::set<NodeId>>> LoadMotifTruth(
    const std::filesystem::path& path);

}  // namespace viewex

#endif  // VIEWEX_IO_TU_H_
