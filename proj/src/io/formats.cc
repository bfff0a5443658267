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

#include "viewex/io/formats.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "absl/strings/str_format.h"
#include "viewex/explainer.h"

namespace viewex {
namespace {

using Json = nlohmann::ordered_json;

// Thrown inside parsers and turned into a status at the boundary.
struct SchemaError {
  std::string message;
};

[[noreturn]] void Fail(std::string message) {
  throw SchemaError{std::move(message)};
}

void CheckKeys(const Json& j, std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!j.is_object()) Fail(where + " must be an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) known |= key == a;
    if (!known) Fail(absl::StrFormat("%s: unknown field '%s'", where, key));
  }
}

const Json& Field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) {
    Fail(absl::StrFormat("%s: missing field '%s'", where, key));
  }
  return j.at(key);
}

double Real(const Json& j, const std::string& where) {
  if (!j.is_number()) Fail(where + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) Fail(where + " must be finite");
  return v;
}

int64_t Int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) Fail(where + " must be an integer");
  return j.get<int64_t>();
}

void CheckHeader(const Json& j, const char* format) {
  if (!j.is_object()) Fail("top level must be an object");
  if (!j.contains("format") || j.at("format") != format) {
    Fail(absl::StrFormat("not a %s file", format));
  }
  if (!j.contains("version") || j.at("version") != kFormatVersion) {
    Fail(absl::StrFormat("unsupported %s version", format));
  }
}

Json Header(const char* format) {
  Json j;
  j["format"] = format;
  j["version"] = kFormatVersion;
  return j;
}

Json MatrixJson(const Eigen::MatrixXd& m) {
  Json data = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) data.push_back(m(r, c));
  }
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["data"] = std::move(data);
  return j;
}

Eigen::MatrixXd MatrixFrom(const Json& j, const std::string& where) {
  CheckKeys(j, {"rows", "cols", "data"}, where);
  const int64_t rows = Int(Field(j, "rows", where), where + ".rows");
  const int64_t cols = Int(Field(j, "cols", where), where + ".cols");
  const Json& data = Field(j, "data", where);
  if (rows < 0 || cols < 0 || !data.is_array() ||
      static_cast<int64_t>(data.size()) != rows * cols) {
    Fail(where + ": data does not hold rows * cols numbers");
  }
  Eigen::MatrixXd m(rows, cols);
  for (int64_t i = 0; i < rows * cols; ++i) {
    m(i / cols, i % cols) = Real(data[i], where + ".data");
  }
  return m;
}

Json BoundJson(const CoverageBound& b) { return Json::array({b.lower, b.upper}); }

CoverageBound BoundFrom(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) Fail(where + " must be [lower, upper]");
  return {static_cast<int>(Int(j[0], where)), static_cast<int>(Int(j[1], where))};
}

Json ConfigJson(const Config& c) {
  Json j;
  j["theta"] = c.theta;
  j["radius"] = c.radius;
  j["gamma"] = c.gamma;
  j["distance"] = "normalized-euclidean";
  Json coverage;
  coverage["default"] = BoundJson(c.default_coverage);
  Json labels = Json::object();
  for (const auto& [label, bound] : c.coverage) {
    labels[std::to_string(label)] = BoundJson(bound);
  }
  coverage["labels"] = std::move(labels);
  j["coverage"] = std::move(coverage);
  Json influence;
  influence["mode"] =
      c.influence.mode == InfluenceMode::kExact ? "exact" : "rw";
  influence["walks"] = c.influence.walks;
  influence["seed"] = c.influence.seed;
  j["influence"] = std::move(influence);
  j["pattern_min_support"] = c.pattern_min_support;
  j["pattern_max_nodes"] = c.pattern_max_nodes;
  j["hops"] = c.hop_override.has_value() ? Json(*c.hop_override) : Json();
  j["pattern_cache_capacity"] = c.pattern_cache_capacity;
  return j;
}

Config ConfigFrom(const Json& j) {
  const std::string w = "config";
  CheckKeys(j, {"theta", "radius", "gamma", "distance", "coverage",
                "influence", "pattern_min_support", "pattern_max_nodes",
                "hops", "pattern_cache_capacity"},
            w);
  Config c;
  if (j.contains("theta")) c.theta = Real(j["theta"], "theta");
  if (j.contains("radius")) c.radius = Real(j["radius"], "radius");
  if (j.contains("gamma")) c.gamma = Real(j["gamma"], "gamma");
  if (j.contains("distance") && j["distance"] != "normalized-euclidean") {
    Fail("distance: only normalized-euclidean is supported");
  }
  if (j.contains("coverage")) {
    const Json& cov = j["coverage"];
    CheckKeys(cov, {"default", "labels"}, "coverage");
    if (cov.contains("default")) {
      c.default_coverage = BoundFrom(cov["default"], "coverage.default");
    }
    if (cov.contains("labels")) {
      if (!cov["labels"].is_object()) Fail("coverage.labels must be an object");
      for (const auto& [key, bound] : cov["labels"].items()) {
        size_t used = 0;
        int label = 0;
        try {
          label = std::stoi(key, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != key.size()) {
          Fail(absl::StrFormat("coverage.labels: '%s' is not a label", key));
        }
        c.coverage[label] = BoundFrom(bound, "coverage.labels." + key);
      }
    }
  }
  if (j.contains("influence")) {
    const Json& inf = j["influence"];
    CheckKeys(inf, {"mode", "walks", "seed"}, "influence");
    if (inf.contains("mode")) {
      if (inf["mode"] == "exact") {
        c.influence.mode = InfluenceMode::kExact;
      } else if (inf["mode"] == "rw") {
        c.influence.mode = InfluenceMode::kRandomWalk;
      } else {
        Fail("influence.mode must be 'exact' or 'rw'");
      }
    }
    if (inf.contains("walks")) {
      c.influence.walks = static_cast<int>(Int(inf["walks"], "influence.walks"));
    }
    if (inf.contains("seed")) {
      if (!inf["seed"].is_number_unsigned()) {
        Fail("influence.seed must be a non-negative integer");
      }
      c.influence.seed = inf["seed"].get<uint64_t>();
    }
  }
  if (j.contains("pattern_min_support")) {
    c.pattern_min_support =
        static_cast<int>(Int(j["pattern_min_support"], "pattern_min_support"));
  }
  if (j.contains("pattern_max_nodes")) {
    c.pattern_max_nodes =
        static_cast<int>(Int(j["pattern_max_nodes"], "pattern_max_nodes"));
  }
  if (j.contains("hops") && !j["hops"].is_null()) {
    c.hop_override = static_cast<int>(Int(j["hops"], "hops"));
  }
  if (j.contains("pattern_cache_capacity")) {
    c.pattern_cache_capacity = static_cast<int>(
        Int(j["pattern_cache_capacity"], "pattern_cache_capacity"));
  }
  if (absl::Status s = c.Validate(); !s.ok()) Fail(std::string(s.message()));
  return c;
}

Json EdgesJson(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(Json::array({e.u, e.v, e.type}));
  return out;
}

std::vector<Edge> EdgesFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where + " must be an array");
  std::vector<Edge> edges;
  for (const Json& e : j) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
      Fail(where + ": an edge is [u, v] or [u, v, type]");
    }
    edges.push_back({static_cast<NodeId>(Int(e[0], where)),
                     static_cast<NodeId>(Int(e[1], where)),
                     e.size() == 3 ? static_cast<TypeId>(Int(e[2], where))
                                   : kDefaultEdgeType});
  }
  return edges;
}

template <typename T>
std::vector<T> IntsFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) Fail(where + " must be an array");
  std::vector<T> out;
  for (const Json& v : j) out.push_back(static_cast<T>(Int(v, where)));
  return out;
}

Json CoverageJson(const CoverageReport& r) {
  Json j;
  j["nodes_covered"] = r.nodes_covered;
  j["nodes_total"] = r.nodes_total;
  j["edges_covered"] = r.edges_covered;
  j["edges_total"] = r.edges_total;
  j["edge_loss_pct"] = r.edge_loss_pct();
  return j;
}

CoverageReport CoverageFrom(const Json& j, const std::string& where) {
  CheckKeys(j, {"nodes_covered", "nodes_total", "edges_covered", "edges_total",
                "edge_loss_pct"},
            where);
  CoverageReport r;
  r.nodes_covered = static_cast<int>(Int(Field(j, "nodes_covered", where), where));
  r.nodes_total = static_cast<int>(Int(Field(j, "nodes_total", where), where));
  r.edges_covered = static_cast<int>(Int(Field(j, "edges_covered", where), where));
  r.edges_total = static_cast<int>(Int(Field(j, "edges_total", where), where));
  return r;
}

ExplanationSubgraph SubgraphFrom(const Json& j, ClassLabel label,
                                 const GraphDatabase& db,
                                 const std::string& where) {
  CheckKeys(j, {"graph", "nodes", "node_types", "edges"}, where);
  ExplanationSubgraph s;
  s.label = label;
  s.source_graph = static_cast<GraphId>(Int(Field(j, "graph", where), where));
  const std::vector<NodeId> nodes =
      IntsFrom<NodeId>(Field(j, "nodes", where), where + ".nodes");
  std::vector<TypeId> types =
      IntsFrom<TypeId>(Field(j, "node_types", where), where + ".node_types");
  if (types.size() != nodes.size()) {
    Fail(where + ": nodes and node_types differ in length");
  }
  s.nodes = std::set<NodeId>(nodes.begin(), nodes.end());
  if (s.nodes.size() != nodes.size()) Fail(where + ": repeated node");
  // Features follow the source graph when every id is valid; otherwise the
  // verifier reports the bad ids.
  Eigen::MatrixXd features;
  const bool known_graph = s.source_graph >= 0 && s.source_graph < db.size();
  const Graph* source = known_graph ? &db.graph(s.source_graph) : nullptr;
  const int width = source != nullptr    ? source->feature_dim()
                    : db.size() > 0      ? db.graph(0).feature_dim()
                                         : 0;
  features = Eigen::MatrixXd::Zero(nodes.size(), width);
  if (source != nullptr) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i] >= 0 && nodes[i] < source->num_nodes()) {
        features.row(i) = source->features().row(nodes[i]);
      }
    }
  }
  absl::StatusOr<Graph> g =
      Graph::Create(std::move(types), std::move(features),
                    EdgesFrom(Field(j, "edges", where), where + ".edges"),
                    nodes);
  if (!g.ok()) Fail(absl::StrFormat("%s: %s", where, g.status().message()));
  s.graph = *std::move(g);
  return s;
}

Json PatternJson(const Pattern& p) {
  Json j;
  j["node_types"] = p.topology().node_types();
  j["edges"] = EdgesJson(p.topology().edges());
  return j;
}

Pattern PatternFrom(const Json& j, const std::string& where) {
  CheckKeys(j, {"node_types", "edges"}, where);
  absl::StatusOr<Pattern> p = Pattern::Create(
      IntsFrom<TypeId>(Field(j, "node_types", where), where + ".node_types"),
      EdgesFrom(Field(j, "edges", where), where + ".edges"));
  if (!p.ok()) Fail(absl::StrFormat("%s: %s", where, p.status().message()));
  return *std::move(p);
}

template <typename F>
auto Guarded(F&& parse) -> absl::StatusOr<decltype(parse())> {
  try {
    return parse();
  } catch (const SchemaError& e) {
    return absl::InvalidArgumentError(e.message);
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(e.what());
  }
}

}  // namespace

std::string SerializeWeights(const GcnModel& model) {
  Json j = Header("viewex-weights");
  j["feature_dim"] = model.feature_dim();
  j["num_classes"] = model.num_classes();
  j["activation"] = "relu";
  j["pooling"] = "max";
  Json layers = Json::array();
  for (const Eigen::MatrixXd& l : model.layers()) layers.push_back(MatrixJson(l));
  j["layers"] = std::move(layers);
  Json classifier;
  classifier["weight"] = MatrixJson(model.classifier_weight());
  Json bias = Json::array();
  for (int i = 0; i < model.classifier_bias().size(); ++i) {
    bias.push_back(model.classifier_bias()(i));
  }
  classifier["bias"] = std::move(bias);
  j["classifier"] = std::move(classifier);
  return j.dump(1) + "\n";
}

absl::StatusOr<GcnModel> ParseWeights(std::string_view text) {
  absl::StatusOr<absl::StatusOr<GcnModel>> out = Guarded([&] {
    const Json j = Json::parse(text);
    CheckHeader(j, "viewex-weights");
    CheckKeys(j, {"format", "version", "feature_dim", "num_classes",
                  "activation", "pooling", "layers", "classifier"},
              "weights");
    if (Field(j, "activation", "weights") != "relu") {
      Fail("weights: activation must be relu");
    }
    if (Field(j, "pooling", "weights") != "max") {
      Fail("weights: pooling must be max");
    }
    const Json& layers_json = Field(j, "layers", "weights");
    if (!layers_json.is_array()) Fail("weights.layers must be an array");
    std::vector<Eigen::MatrixXd> layers;
    for (size_t k = 0; k < layers_json.size(); ++k) {
      layers.push_back(
          MatrixFrom(layers_json[k], absl::StrFormat("weights.layers[%d]", k)));
    }
    const Json& head = Field(j, "classifier", "weights");
    CheckKeys(head, {"weight", "bias"}, "weights.classifier");
    Eigen::MatrixXd weight = MatrixFrom(Field(head, "weight", "classifier"),
                                        "weights.classifier.weight");
    const Json& bias_json = Field(head, "bias", "classifier");
    if (!bias_json.is_array()) Fail("weights.classifier.bias must be an array");
    Eigen::VectorXd bias(bias_json.size());
    for (size_t i = 0; i < bias_json.size(); ++i) {
      bias(i) = Real(bias_json[i], "weights.classifier.bias");
    }
    absl::StatusOr<GcnModel> model =
        GcnModel::Create(std::move(layers), std::move(weight), std::move(bias));
    if (model.ok()) {
      if (model->feature_dim() != Int(Field(j, "feature_dim", "weights"),
                                      "weights.feature_dim")) {
        Fail("weights: feature_dim does not match the first layer");
      }
      if (model->num_classes() != Int(Field(j, "num_classes", "weights"),
                                      "weights.num_classes")) {
        Fail("weights: num_classes does not match the classifier");
      }
    }
    return model;
  });
  if (!out.ok()) return out.status();
  return *std::move(out);
}

std::string SerializeConfig(const Config& config) {
  Json j = Header("viewex-config");
  j.update(ConfigJson(config));
  return j.dump(1) + "\n";
}

absl::StatusOr<Config> ParseConfig(std::string_view text) {
  return Guarded([&] {
    Json j = Json::parse(text);
    CheckHeader(j, "viewex-config");
    j.erase("format");
    j.erase("version");
    return ConfigFrom(j);
  });
}

std::string SerializeViews(const ViewFile& file) {
  Json j = Header("viewex-views");
  j["algorithm"] = file.algorithm == Algorithm::kApprox ? "approx" : "stream";
  j["config"] = ConfigJson(file.config);
  Json views = Json::array();
  for (size_t i = 0; i < file.build.views.size(); ++i) {
    const ExplanationView& view = file.build.views[i];
    Json v;
    v["label"] = view.label;
    Json patterns = Json::array();
    for (const Pattern& p : view.patterns) patterns.push_back(PatternJson(p));
    v["patterns"] = std::move(patterns);
    Json subgraphs = Json::array();
    for (const ExplanationSubgraph& s : view.subgraphs) {
      Json sj;
      sj["graph"] = s.source_graph;
      sj["nodes"] = s.graph.original_ids();
      sj["node_types"] = s.graph.topology().node_types();
      sj["edges"] = EdgesJson(s.graph.edges());
      subgraphs.push_back(std::move(sj));
    }
    v["subgraphs"] = std::move(subgraphs);
    v["uncovered"] = i < file.build.uncovered.size()
                         ? Json(file.build.uncovered[i])
                         : Json::array();
    v["coverage"] = CoverageJson(view.coverage);
    views.push_back(std::move(v));
  }
  j["views"] = std::move(views);
  return j.dump(1) + "\n";
}

absl::StatusOr<ViewFile> ParseViews(std::string_view text,
                                    const GraphDatabase& db) {
  return Guarded([&] {
    const Json j = Json::parse(text);
    CheckHeader(j, "viewex-views");
    CheckKeys(j, {"format", "version", "algorithm", "config", "views"},
              "views file");
    ViewFile file;
    const Json& algo = Field(j, "algorithm", "views file");
    if (algo == "approx") {
      file.algorithm = Algorithm::kApprox;
    } else if (algo == "stream") {
      file.algorithm = Algorithm::kStream;
    } else {
      Fail("algorithm must be 'approx' or 'stream'");
    }
    file.config = ConfigFrom(Field(j, "config", "views file"));
    const Json& views = Field(j, "views", "views file");
    if (!views.is_array()) Fail("views must be an array");
    for (size_t i = 0; i < views.size(); ++i) {
      const std::string w = absl::StrFormat("views[%d]", i);
      const Json& v = views[i];
      CheckKeys(v, {"label", "patterns", "subgraphs", "uncovered", "coverage"},
                w);
      ExplanationView view;
      view.label = static_cast<ClassLabel>(Int(Field(v, "label", w), w));
      const Json& patterns = Field(v, "patterns", w);
      if (!patterns.is_array()) Fail(w + ".patterns must be an array");
      for (size_t k = 0; k < patterns.size(); ++k) {
        // A pattern without nodes matches nothing; it is dropped so the
        // verifier reports what it fails to cover.
        if (patterns[k].contains("node_types") &&
            patterns[k]["node_types"].is_array() &&
            patterns[k]["node_types"].empty()) {
          continue;
        }
        view.patterns.push_back(
            PatternFrom(patterns[k], absl::StrFormat("%s.patterns[%d]", w, k)));
      }
      const Json& subgraphs = Field(v, "subgraphs", w);
      if (!subgraphs.is_array()) Fail(w + ".subgraphs must be an array");
      for (size_t k = 0; k < subgraphs.size(); ++k) {
        view.subgraphs.push_back(
            SubgraphFrom(subgraphs[k], view.label, db,
                         absl::StrFormat("%s.subgraphs[%d]", w, k)));
      }
      view.coverage = CoverageFrom(Field(v, "coverage", w), w + ".coverage");
      file.build.uncovered.push_back(
          IntsFrom<GraphId>(Field(v, "uncovered", w), w + ".uncovered"));
      file.build.views.push_back(std::move(view));
    }
    return file;
  });
}

std::string SerializeReport(const MetricsReport& report) {
  Json j = Header("viewex-report");
  j["fidelity_plus"] = report.fidelity_plus;
  j["fidelity_minus"] = report.fidelity_minus;
  j["sparsity"] = report.sparsity;
  j["compression"] = report.compression;
  j["edge_loss_pct"] = report.edge_loss_pct;
  if (report.baseline_samples > 0) {
    j["baseline_samples"] = report.baseline_samples;
    j["random_fidelity_plus"] = report.random_fidelity_plus;
  }
  j["graphs_explained"] = report.per_graph.size();
  j["excluded"] = report.excluded;
  Json per_graph = Json::array();
  for (const GraphMetrics& m : report.per_graph) {
    Json g;
    g["graph"] = m.graph;
    g["label"] = m.label;
    g["nodes"] = m.nodes;
    g["fidelity_plus"] = m.fidelity_plus;
    g["fidelity_minus"] = m.fidelity_minus;
    g["sparsity"] = m.sparsity;
    if (report.baseline_samples > 0) {
      g["random_fidelity_plus"] = m.random_fidelity_plus;
    }
    per_graph.push_back(std::move(g));
  }
  j["per_graph"] = std::move(per_graph);
  return j.dump(1) + "\n";
}

absl::StatusOr<std::string> ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrFormat("cannot open %s", path.string()));
  }
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

absl::Status WriteTextFile(const std::filesystem::path& path,
                           std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    return absl::InternalError(absl::StrFormat("cannot write %s", path.string()));
  }
  return absl::OkStatus();
}

}  // namespace viewex
