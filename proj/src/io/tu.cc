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

#include "viewex/io/tu.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace viewex {
namespace {

namespace fs = std::filesystem;

struct Lines {
  fs::path path;
  std::vector<std::string> lines;
};

absl::Status LineError(const fs::path& path, size_t line,
                       const std::string& message) {
  return absl::InvalidArgumentError(
      absl::StrFormat("%s:%d: %s", path.string(), line + 1, message));
}

// Trailing blank lines are dropped; other blank lines are kept and rejected
// by the parsers.
absl::StatusOr<Lines> ReadLines(const fs::path& path) {
  std::ifstream in(path);
  if (!in) {
    return absl::NotFoundError(
        absl::StrFormat("cannot open %s", path.string()));
  }
  Lines out{path, {}};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    out.lines.push_back(line);
  }
  while (!out.lines.empty() &&
         absl::StripAsciiWhitespace(out.lines.back()).empty()) {
    out.lines.pop_back();
  }
  return out;
}

absl::StatusOr<std::optional<Lines>> ReadOptional(const fs::path& path) {
  if (!fs::exists(path)) return std::optional<Lines>();
  absl::StatusOr<Lines> lines = ReadLines(path);
  if (!lines.ok()) return lines.status();
  return std::optional<Lines>(*std::move(lines));
}

absl::StatusOr<std::vector<std::string>> Fields(const Lines& f, size_t i,
                                                size_t expected) {
  std::vector<std::string> fields;
  for (absl::string_view part : absl::StrSplit(f.lines[i], ',')) {
    fields.emplace_back(absl::StripAsciiWhitespace(part));
  }
  if (expected > 0 && fields.size() != expected) {
    return LineError(f.path, i,
                     absl::StrFormat("expected %d fields, found %d", expected,
                                     fields.size()));
  }
  return fields;
}

absl::StatusOr<int64_t> Integer(const Lines& f, size_t i,
                                const std::string& field) {
  int64_t value = 0;
  if (!absl::SimpleAtoi(field, &value)) {
    return LineError(f.path, i, absl::StrFormat("not an integer: '%s'", field));
  }
  return value;
}

absl::StatusOr<std::vector<int64_t>> IntegerColumn(const Lines& f) {
  std::vector<int64_t> out;
  out.reserve(f.lines.size());
  for (size_t i = 0; i < f.lines.size(); ++i) {
    absl::StatusOr<std::vector<std::string>> fields = Fields(f, i, 1);
    if (!fields.ok()) return fields.status();
    absl::StatusOr<int64_t> v = Integer(f, i, (*fields)[0]);
    if (!v.ok()) return v.status();
    out.push_back(*v);
  }
  return out;
}

absl::Status WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    return absl::InternalError(
        absl::StrFormat("cannot write %s", path.string()));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<TuDataset> LoadTuDataset(const fs::path& dir,
                                        const std::string& name) {
  auto file = [&](const char* suffix) { return dir / (name + suffix); };
  absl::StatusOr<Lines> a = ReadLines(file("_A.txt"));
  if (!a.ok()) return a.status();
  absl::StatusOr<Lines> indicator = ReadLines(file("_graph_indicator.txt"));
  if (!indicator.ok()) return indicator.status();
  absl::StatusOr<Lines> graph_labels = ReadLines(file("_graph_labels.txt"));
  if (!graph_labels.ok()) return graph_labels.status();
  absl::StatusOr<std::optional<Lines>> node_labels =
      ReadOptional(file("_node_labels.txt"));
  if (!node_labels.ok()) return node_labels.status();
  absl::StatusOr<std::optional<Lines>> edge_labels =
      ReadOptional(file("_edge_labels.txt"));
  if (!edge_labels.ok()) return edge_labels.status();
  absl::StatusOr<std::optional<Lines>> attributes =
      ReadOptional(file("_node_attributes.txt"));
  if (!attributes.ok()) return attributes.status();

  absl::StatusOr<std::vector<int64_t>> classes = IntegerColumn(*graph_labels);
  if (!classes.ok()) return classes.status();
  const int64_t num_graphs = static_cast<int64_t>(classes->size());

  // Graph membership and local ids.
  absl::StatusOr<std::vector<int64_t>> owner = IntegerColumn(*indicator);
  if (!owner.ok()) return owner.status();
  const size_t num_nodes = owner->size();
  std::vector<int> local(num_nodes);
  std::vector<int> sizes(num_graphs, 0);
  for (size_t i = 0; i < num_nodes; ++i) {
    if ((*owner)[i] < 1 || (*owner)[i] > num_graphs) {
      return LineError(indicator->path, i,
                       absl::StrFormat("graph %d does not exist (%d graphs)",
                                       (*owner)[i], num_graphs));
    }
    --(*owner)[i];
    local[i] = sizes[(*owner)[i]]++;
  }

  std::vector<std::vector<TypeId>> types(num_graphs);
  for (int64_t g = 0; g < num_graphs; ++g) types[g].assign(sizes[g], 0);
  int type_width = 1;
  if (node_labels->has_value()) {
    const Lines& f = **node_labels;
    if (f.lines.size() != num_nodes) {
      return LineError(f.path, f.lines.size(),
                       absl::StrFormat("expected %d node labels, found %d",
                                       num_nodes, f.lines.size()));
    }
    absl::StatusOr<std::vector<int64_t>> values = IntegerColumn(f);
    if (!values.ok()) return values.status();
    for (size_t i = 0; i < num_nodes; ++i) {
      if ((*values)[i] < 0) {
        return LineError(f.path, i, "node label must be non-negative");
      }
      types[(*owner)[i]][local[i]] = static_cast<TypeId>((*values)[i]);
      type_width = std::max(type_width, static_cast<int>((*values)[i]) + 1);
    }
  }

  std::vector<Eigen::MatrixXd> features(num_graphs);
  if (attributes->has_value()) {
    const Lines& f = **attributes;
    if (f.lines.size() != num_nodes) {
      return LineError(f.path, f.lines.size(),
                       absl::StrFormat("expected %d attribute rows, found %d",
                                       num_nodes, f.lines.size()));
    }
    size_t width = 0;
    for (size_t i = 0; i < num_nodes; ++i) {
      absl::StatusOr<std::vector<std::string>> fields =
          Fields(f, i, width);
      if (!fields.ok()) return fields.status();
      if (width == 0) {
        width = fields->size();
        for (int64_t g = 0; g < num_graphs; ++g) {
          features[g] = Eigen::MatrixXd::Zero(sizes[g], width);
        }
      }
      for (size_t k = 0; k < width; ++k) {
        double value = 0.0;
        if (!absl::SimpleAtod((*fields)[k], &value) || !std::isfinite(value)) {
          return LineError(f.path, i,
                           absl::StrFormat("not a finite number: '%s'",
                                           (*fields)[k]));
        }
        features[(*owner)[i]](local[i], k) = value;
      }
    }
  } else {
    for (int64_t g = 0; g < num_graphs; ++g) {
      features[g] = Eigen::MatrixXd::Zero(sizes[g], type_width);
      for (int v = 0; v < sizes[g]; ++v) {
        features[g](v, node_labels->has_value() ? types[g][v] : 0) = 1.0;
      }
    }
  }

  std::optional<std::vector<int64_t>> edge_types;
  if (edge_labels->has_value()) {
    const Lines& f = **edge_labels;
    if (f.lines.size() != a->lines.size()) {
      return LineError(f.path, f.lines.size(),
                       absl::StrFormat("expected %d edge labels, found %d",
                                       a->lines.size(), f.lines.size()));
    }
    absl::StatusOr<std::vector<int64_t>> values = IntegerColumn(f);
    if (!values.ok()) return values.status();
    for (size_t i = 0; i < values->size(); ++i) {
      if ((*values)[i] < 0) {
        return LineError(f.path, i, "edge label must be non-negative");
      }
    }
    edge_types = *std::move(values);
  }

  std::vector<std::vector<Edge>> edges(num_graphs);
  for (size_t i = 0; i < a->lines.size(); ++i) {
    absl::StatusOr<std::vector<std::string>> fields = Fields(*a, i, 2);
    if (!fields.ok()) return fields.status();
    int64_t ends[2];
    for (int k = 0; k < 2; ++k) {
      absl::StatusOr<int64_t> v = Integer(*a, i, (*fields)[k]);
      if (!v.ok()) return v.status();
      if (*v < 1 || *v > static_cast<int64_t>(num_nodes)) {
        return LineError(a->path, i,
                         absl::StrFormat("node %d does not exist (%d nodes)",
                                         *v, num_nodes));
      }
      ends[k] = *v - 1;
    }
    if (ends[0] == ends[1]) {
      return LineError(a->path, i, "self-loop");
    }
    if ((*owner)[ends[0]] != (*owner)[ends[1]]) {
      return LineError(a->path, i, "edge joins nodes of different graphs");
    }
    const TypeId type = edge_types.has_value()
                            ? static_cast<TypeId>((*edge_types)[i])
                            : kDefaultEdgeType;
    edges[(*owner)[ends[0]]].push_back(
        {local[ends[0]], local[ends[1]], type});
  }

  std::vector<Graph> graphs;
  graphs.reserve(num_graphs);
  for (int64_t g = 0; g < num_graphs; ++g) {
    absl::StatusOr<Graph> graph =
        Graph::Create(std::move(types[g]), std::move(features[g]),
                      std::move(edges[g]));
    if (!graph.ok()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("%s: graph %d: %s", a->path.string(), g + 1,
                          graph.status().message()));
    }
    graphs.push_back(*std::move(graph));
  }
  TuDataset out{GraphDatabase(std::move(graphs)), {}};
  for (int64_t c : *classes) out.graph_labels.push_back(static_cast<int>(c));
  return out;
}

absl::Status SaveTuDataset(const fs::path& dir, const std::string& name,
                           const GraphDatabase& db,
                           std::span<const int> graph_labels) {
  if (static_cast<int>(graph_labels.size()) != db.size()) {
    return absl::InvalidArgumentError("one class per graph is required");
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::InternalError(
        absl::StrFormat("cannot create %s: %s", dir.string(), ec.message()));
  }
  std::ostringstream a, edge_labels, indicator, classes, node_labels,
      attributes;
  bool typed_edges = false;
  int64_t offset = 0;
  for (GraphId g = 0; g < db.size(); ++g) {
    const Graph& graph = db.graph(g);
    for (const Edge& e : graph.edges()) {
      a << offset + e.u + 1 << ", " << offset + e.v + 1 << "\n";
      edge_labels << e.type << "\n";
      typed_edges |= e.type != kDefaultEdgeType;
    }
    for (NodeId v = 0; v < graph.num_nodes(); ++v) {
      indicator << g + 1 << "\n";
      node_labels << graph.node_type(v) << "\n";
      std::vector<std::string> row;
      for (int k = 0; k < graph.feature_dim(); ++k) {
        row.push_back(absl::StrFormat("%.17g", graph.features()(v, k)));
      }
      attributes << absl::StrJoin(row, ", ") << "\n";
    }
    classes << graph_labels[g] << "\n";
    offset += graph.num_nodes();
  }
  auto file = [&](const char* suffix) { return dir / (name + suffix); };
  for (const auto& [suffix, text] :
       {std::pair{"_A.txt", a.str()},
        std::pair{"_graph_indicator.txt", indicator.str()},
        std::pair{"_graph_labels.txt", classes.str()},
        std::pair{"_node_labels.txt", node_labels.str()},
        std::pair{"_node_attributes.txt", attributes.str()}}) {
    if (absl::Status s = WriteFile(file(suffix), text); !s.ok()) return s;
  }
  if (typed_edges) return WriteFile(file("_edge_labels.txt"), edge_labels.str());
  return absl::OkStatus();
}

absl::Status SaveMotifTruth(const fs::path& path,
                            std::span<const std::set<NodeId>> motifs) {
  std::ostringstream out;
  for (const std::set<NodeId>& m : motifs) out << absl::StrJoin(m, ", ") << "\n";
  return WriteFile(path, out.str());
}

absl::StatusOr<std::vector<std::set<NodeId>>> LoadMotifTruth(
    const fs::path& path) {
  absl::StatusOr<Lines> f = ReadLines(path);
  if (!f.ok()) return f.status();
  std::vector<std::set<NodeId>> out;
  for (size_t i = 0; i < f->lines.size(); ++i) {
    std::set<NodeId> motif;
    if (!absl::StripAsciiWhitespace(f->lines[i]).empty()) {
      absl::StatusOr<std::vector<std::string>> fields = Fields(*f, i, 0);
      if (!fields.ok()) return fields.status();
      for (const std::string& field : *fields) {
        absl::StatusOr<int64_t> v = Integer(*f, i, field);
        if (!v.ok()) return v.status();
        if (*v < 0) return LineError(f->path, i, "negative node id");
        motif.insert(static_cast<NodeId>(*v));
      }
    }
    out.push_back(std::move(motif));
  }
  return out;
}

}  // namespace viewex
