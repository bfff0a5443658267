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

// Command-line front end: synthetic data, explanation views, metrics,
// verification and pattern queries. Per-phase timings are logged to stderr
// as one JSON object per line.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "viewex/explainer.h"
#include "viewex/io/formats.h"
#include "viewex/io/synthetic.h"
#include "viewex/io/tu.h"
#include "viewex/matching.h"
#include "viewex/metrics.h"
#include "viewex/pipeline.h"
#include "viewex/verifier.h"

namespace viewex {
namespace {

namespace fs = std::filesystem;

constexpr int kExitViolation = 1;
constexpr int kExitError = 2;

class PhaseTimer {
 public:
  explicit PhaseTimer(std::string command) : command_(std::move(command)) {}

  // Logs the time since the previous call.
  void Done(const std::string& phase) {
    const auto now = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(now - last_).count();
    std::cerr << absl::StrFormat(
                     "{\"command\": \"%s\", \"phase\": \"%s\", "
                     "\"seconds\": %.6f}",
                     command_, phase, seconds)
              << std::endl;
    last_ = now;
  }

 private:
  std::string command_;
  std::chrono::steady_clock::time_point last_ =
      std::chrono::steady_clock::now();
};

int DefaultWorkers() {
  int workers = 1;
  if (const char* env = std::getenv("VIEWEX_WORKERS")) {
    if (!absl::SimpleAtoi(env, &workers) || workers < 1) workers = 1;
  }
  return workers;
}

int ReportError(const absl::Status& status) {
  std::cerr << "error: " << status.message() << std::endl;
  return kExitError;
}

struct DatasetArgs {
  std::string dir;
  std::string name;

  void Register(CLI::App* app) {
    app->add_option("--dataset", dir, "Directory of a TU dataset")
        ->required();
    app->add_option("--name", name,
                    "Dataset name prefix (default: directory name)");
  }

  absl::StatusOr<TuDataset> Load() const {
    std::string n = name;
    if (n.empty()) n = fs::path(dir).lexically_normal().filename().string();
    if (n.empty()) n = fs::path(dir).lexically_normal().parent_path().filename();
    return LoadTuDataset(dir, n);
  }
};

absl::StatusOr<GcnModel> LoadModel(const std::string& path) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<GcnModel> model = ParseWeights(*text);
  if (!model.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", path, model.status().message()));
  }
  return model;
}

absl::StatusOr<ViewFile> LoadViewFile(const std::string& path,
                                      const GraphDatabase& db) {
  absl::StatusOr<std::string> text = ReadTextFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<ViewFile> file = ParseViews(*text, db);
  if (!file.ok()) {
    return absl::InvalidArgumentError(
        absl::StrFormat("%s: %s", path, file.status().message()));
  }
  return file;
}

absl::Status CheckFeatureWidth(const GraphDatabase& db, const GcnModel& m) {
  for (GraphId i = 0; i < db.size(); ++i) {
    if (db.graph(i).feature_dim() != m.feature_dim()) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "graph %d has %d features, the model expects %d", i,
          db.graph(i).feature_dim(), m.feature_dim()));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<int>> ParseIntList(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (absl::string_view part : absl::StrSplit(text, ',')) {
    int v = 0;
    if (!absl::SimpleAtoi(part, &v)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("not an integer: '%s'", part));
    }
    out.push_back(v);
  }
  return out;
}

// --- synth ---------------------------------------------------------------

struct SynthArgs {
  int graphs = 40;
  int base_nodes = 30;
  uint64_t seed = 7;
  std::string out;
  std::string name = "SYN";
};

int RunSynth(const SynthArgs& args) {
  PhaseTimer timer("synth");
  if (args.base_nodes < 5) {
    return ReportError(absl::InvalidArgumentError("--base-nodes must be >= 5"));
  }
  const MotifDataset data =
      MakeMotifDataset(args.graphs, args.base_nodes, args.seed);
  timer.Done("generate");
  const fs::path dir(args.out);
  if (absl::Status s = SaveTuDataset(dir, args.name, data.db, data.classes);
      !s.ok()) {
    return ReportError(s);
  }
  if (absl::Status s =
          SaveMotifTruth(dir / (args.name + "_motifs.txt"), data.motifs);
      !s.ok()) {
    return ReportError(s);
  }
  if (absl::Status s = WriteTextFile(dir / (args.name + "_weights.json"),
                                     SerializeWeights(MotifReferenceModel()));
      !s.ok()) {
    return ReportError(s);
  }
  timer.Done("write");
  return 0;
}

// --- explain -------------------------------------------------------------

struct ExplainArgs {
  DatasetArgs dataset;
  std::string weights;
  std::string config;
  std::string algo = "approx";
  std::string labels;
  std::string out;
  int workers = 1;
};

int RunExplain(const ExplainArgs& args) {
  PhaseTimer timer("explain");
  absl::StatusOr<TuDataset> data = args.dataset.Load();
  if (!data.ok()) return ReportError(data.status());
  absl::StatusOr<GcnModel> model = LoadModel(args.weights);
  if (!model.ok()) return ReportError(model.status());
  if (absl::Status s = CheckFeatureWidth(data->db, *model); !s.ok()) {
    return ReportError(s);
  }
  Config config;
  if (!args.config.empty()) {
    absl::StatusOr<std::string> text = ReadTextFile(args.config);
    if (!text.ok()) return ReportError(text.status());
    absl::StatusOr<Config> parsed = ParseConfig(*text);
    if (!parsed.ok()) {
      return ReportError(absl::InvalidArgumentError(absl::StrFormat(
          "%s: %s", args.config, parsed.status().message())));
    }
    config = *parsed;
  }
  absl::StatusOr<std::vector<int>> labels = ParseIntList(args.labels);
  if (!labels.ok()) return ReportError(labels.status());
  timer.Done("load");

  if (absl::Status s = AssignLabels(data->db, *model, args.workers); !s.ok()) {
    return ReportError(s);
  }
  timer.Done("label");
  const Algorithm algorithm =
      args.algo == "stream" ? Algorithm::kStream : Algorithm::kApprox;
  absl::StatusOr<ViewBuild> build = BuildViews(
      data->db, *model, config,
      std::vector<ClassLabel>(labels->begin(), labels->end()), algorithm,
      args.workers);
  if (!build.ok()) return ReportError(build.status());
  timer.Done("explain");

  const ViewFile file{algorithm, config, *std::move(build)};
  if (absl::Status s = WriteTextFile(args.out, SerializeViews(file));
      !s.ok()) {
    return ReportError(s);
  }
  timer.Done("write");
  return 0;
}

// --- metrics -------------------------------------------------------------

struct MetricsArgs {
  DatasetArgs dataset;
  std::string views;
  std::string weights;
  std::string out;
  int baseline = 0;
  uint64_t seed = 1;
  int workers = 1;
};

int RunMetrics(const MetricsArgs& args) {
  PhaseTimer timer("metrics");
  absl::StatusOr<TuDataset> data = args.dataset.Load();
  if (!data.ok()) return ReportError(data.status());
  absl::StatusOr<GcnModel> model = LoadModel(args.weights);
  if (!model.ok()) return ReportError(model.status());
  if (absl::Status s = CheckFeatureWidth(data->db, *model); !s.ok()) {
    return ReportError(s);
  }
  absl::StatusOr<ViewFile> file = LoadViewFile(args.views, data->db);
  if (!file.ok()) return ReportError(file.status());
  timer.Done("load");
  absl::StatusOr<MetricsReport> report =
      EvaluateViews(data->db, file->build.views, *model, args.workers,
                    args.baseline, args.seed);
  if (!report.ok()) return ReportError(report.status());
  timer.Done("evaluate");
  const std::string text = SerializeReport(*report);
  if (args.out.empty()) {
    std::cout << text;
  } else if (absl::Status s = WriteTextFile(args.out, text); !s.ok()) {
    return ReportError(s);
  }
  timer.Done("write");
  return 0;
}

// --- verify --------------------------------------------------------------

struct VerifyArgs {
  DatasetArgs dataset;
  std::string views;
  std::string weights;
};

int RunVerify(const VerifyArgs& args) {
  PhaseTimer timer("verify");
  absl::StatusOr<TuDataset> data = args.dataset.Load();
  if (!data.ok()) return ReportError(data.status());
  absl::StatusOr<GcnModel> model = LoadModel(args.weights);
  if (!model.ok()) return ReportError(model.status());
  if (absl::Status s = CheckFeatureWidth(data->db, *model); !s.ok()) {
    return ReportError(s);
  }
  absl::StatusOr<ViewFile> file = LoadViewFile(args.views, data->db);
  if (!file.ok()) return ReportError(file.status());
  timer.Done("load");
  int subgraphs = 0;
  for (const ExplanationView& view : file->build.views) {
    if (std::optional<Violation> v =
            VerifyView(data->db, *model, file->config, view)) {
      timer.Done("verify");
      std::cerr << absl::StrFormat("violation %s (view of label %d): %s",
                                   ConstraintName(v->constraint), view.label,
                                   v->message)
                << std::endl;
      return kExitViolation;
    }
    subgraphs += static_cast<int>(view.subgraphs.size());
  }
  timer.Done("verify");
  std::cout << absl::StrFormat("ok: %d views, %d subgraphs\n",
                               file->build.views.size(), subgraphs);
  return 0;
}

// --- match ---------------------------------------------------------------

struct MatchArgs {
  DatasetArgs dataset;
  std::string types;
  std::string edges;
};

absl::StatusOr<Pattern> ParsePattern(const MatchArgs& args) {
  absl::StatusOr<std::vector<int>> types = ParseIntList(args.types);
  if (!types.ok()) return types.status();
  std::vector<Edge> edges;
  if (!args.edges.empty()) {
    for (absl::string_view part : absl::StrSplit(args.edges, ',')) {
      const std::vector<std::string> ends = absl::StrSplit(part, '-');
      Edge e;
      if (ends.size() != 2 || !absl::SimpleAtoi(ends[0], &e.u) ||
          !absl::SimpleAtoi(ends[1], &e.v)) {
        return absl::InvalidArgumentError(
            absl::StrFormat("edge '%s' is not of the form u-v", part));
      }
      edges.push_back(e);
    }
  }
  return Pattern::Create(std::vector<TypeId>(types->begin(), types->end()),
                         std::move(edges));
}

int RunMatch(const MatchArgs& args) {
  PhaseTimer timer("match");
  absl::StatusOr<Pattern> pattern = ParsePattern(args);
  if (!pattern.ok()) return ReportError(pattern.status());
  absl::StatusOr<TuDataset> data = args.dataset.Load();
  if (!data.ok()) return ReportError(data.status());
  timer.Done("load");
  int graphs_with_match = 0;
  int64_t total = 0;
  std::string hits;
  for (GraphId i = 0; i < data->db.size(); ++i) {
    const size_t count =
        MatchPattern(pattern->topology(), data->db.graph(i).topology()).size();
    if (count == 0) continue;
    ++graphs_with_match;
    total += static_cast<int64_t>(count);
    hits += absl::StrFormat("%s{\"graph\": %d, \"matches\": %d}",
                            hits.empty() ? "" : ", ", i, count);
  }
  timer.Done("match");
  std::cout << absl::StrFormat(
      "{\"graphs\": %d, \"graphs_with_match\": %d, \"matches\": %d, "
      "\"hits\": [%s]}\n",
      data->db.size(), graphs_with_match, total, hits);
  return 0;
}

}  // namespace
}  // namespace viewex

int main(int argc, char** argv) {
  using namespace viewex;
  CLI::App app{"Explanation views for graph classifiers"};
  app.require_subcommand(1);
  const int default_workers = DefaultWorkers();

  SynthArgs synth;
  CLI::App* synth_cmd =
      app.add_subcommand("synth", "Write the synthetic motif dataset");
  synth_cmd->add_option("--graphs", synth.graphs, "Number of graphs")
      ->check(CLI::NonNegativeNumber);
  synth_cmd->add_option("--base-nodes", synth.base_nodes,
                        "Nodes of each base graph");
  synth_cmd->add_option("--seed", synth.seed, "Generator seed");
  synth_cmd->add_option("--out", synth.out, "Output directory")->required();
  synth_cmd->add_option("--name", synth.name, "Dataset name prefix");

  ExplainArgs explain;
  explain.workers = default_workers;
  CLI::App* explain_cmd =
      app.add_subcommand("explain", "Build explanation views");
  explain.dataset.Register(explain_cmd);
  explain_cmd->add_option("--weights", explain.weights, "Model weights file")
      ->required();
  explain_cmd->add_option("--config", explain.config, "Configuration file");
  explain_cmd->add_option("--algo", explain.algo, "approx or stream")
      ->check(CLI::IsMember({"approx", "stream"}));
  explain_cmd->add_option("--labels", explain.labels,
                          "Comma-separated labels (default: all)");
  explain_cmd->add_option("--out", explain.out, "Output view file")
      ->required();
  explain_cmd->add_option("--workers", explain.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  MetricsArgs metrics;
  metrics.workers = default_workers;
  CLI::App* metrics_cmd =
      app.add_subcommand("metrics", "Evaluate a view file");
  metrics.dataset.Register(metrics_cmd);
  metrics_cmd->add_option("--views", metrics.views, "View file")->required();
  metrics_cmd->add_option("--weights", metrics.weights, "Model weights file")
      ->required();
  metrics_cmd->add_option("--out", metrics.out,
                          "Report file (default: stdout)");
  metrics_cmd->add_option("--baseline", metrics.baseline,
                          "Random node sets per graph for the baseline")
      ->check(CLI::NonNegativeNumber);
  metrics_cmd->add_option("--seed", metrics.seed, "Baseline seed");
  metrics_cmd->add_option("--workers", metrics.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  VerifyArgs verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a view file against its dataset");
  verify.dataset.Register(verify_cmd);
  verify_cmd->add_option("--views", verify.views, "View file")->required();
  verify_cmd->add_option("--weights", verify.weights, "Model weights file")
      ->required();

  MatchArgs match;
  CLI::App* match_cmd =
      app.add_subcommand("match", "Find a pattern in a dataset");
  match.dataset.Register(match_cmd);
  match_cmd->add_option("--types", match.types,
                        "Comma-separated node types of the pattern")
      ->required();
  match_cmd->add_option("--edges", match.edges,
                        "Comma-separated edges u-v between pattern nodes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }
  if (synth_cmd->parsed()) return RunSynth(synth);
  if (explain_cmd->parsed()) return RunExplain(explain);
  if (metrics_cmd->parsed()) return RunMetrics(metrics);
  if (verify_cmd->parsed()) return RunVerify(verify);
  return RunMatch(match);
}
