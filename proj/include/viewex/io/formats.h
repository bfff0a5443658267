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

// JSON files for model weights, configurations, explanation views and
// metric reports. Every file carries a "format" tag and a "version".
// Real numbers are written in shortest round-trip form, so a save followed
// by a load reproduces every double exactly. The schemas are described in
// README.md.

#ifndef VIEWEX_IO_FORMATS_H_
#define VIEWEX_IO_FORMATS_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "viewex/config.h"
#include "viewex/gcn.h"
#include "viewex/graph.h"
#include "viewex/metrics.h"
#include "viewex/pipeline.h"

namespace viewex {

inline constexpr int kFormatVersion = 1;

std::string SerializeWeights(const GcnModel& model);
absl::StatusOr<GcnModel> ParseWeights(std::string_view text);

// Missing fields keep their defaults; unknown fields are rejected.
std::string SerializeConfig(const Config& config);
absl::StatusOr<Config> ParseConfig(std::string_view text);

struct ViewFile {
  Algorithm algorithm = Algorithm::kApprox;
  Config config;
  ViewBuild build;
};

std::string SerializeViews(const ViewFile& file);
// Subgraph structure comes from the file; node features are copied from the
// source graphs in `db` where the stored node ids allow it.
absl::StatusOr<ViewFile> ParseViews(std::string_view text,
                                    const GraphDatabase& db);

std::string SerializeReport(const MetricsReport& report);

absl::StatusOr<std::string> ReadTextFile(const std::filesystem::path& path);
absl::Status WriteTextFile(const std::filesystem::path& path,
                           std::string_view text);

}  // namespace viewex

#endif  // VIEWEX_IO_FORMATS_H_
