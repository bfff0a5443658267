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

#include "viewex/config.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_format.h"

namespace viewex {

int Config::hops() const {
  if (hop_override.has_value()) return *hop_override;
  return std::max(1, static_cast<int>(std::ceil(radius)));
}

absl::Status Config::Validate() const {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("theta %g outside [0, 1]", theta));
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("gamma %g outside [0, 1]", gamma));
  }
  if (!(radius >= 0.0)) {
    return absl::InvalidArgumentError("radius must be non-negative");
  }
  auto check = [](const CoverageBound& b) {
    return b.lower >= 0 && b.lower <= b.upper;
  };
  if (!check(default_coverage)) {
    return absl::InvalidArgumentError("default coverage bound is not ordered");
  }
  for (const auto& [label, bound] : coverage) {
    if (!check(bound)) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "coverage bound for label %d is not ordered", label));
    }
  }
  if (pattern_max_nodes < 1) {
    return absl::InvalidArgumentError("pattern_max_nodes must be >= 1");
  }
  if (pattern_min_support < 1) {
    return absl::InvalidArgumentError("pattern_min_support must be >= 1");
  }
  if (influence.walks < 0) {
    return absl::InvalidArgumentError("walk count must be non-negative");
  }
  if (hop_override.has_value() && *hop_override < 1) {
    return absl::InvalidArgumentError("hop override must be >= 1");
  }
  if (pattern_cache_capacity < 0) {
    return absl::InvalidArgumentError("pattern cache capacity must be >= 0");
  }
  return absl::OkStatus();
}

}  // namespace viewex
