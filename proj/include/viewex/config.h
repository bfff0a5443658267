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

#ifndef VIEWEX_CONFIG_H_
#define VIEWEX_CONFIG_H_

#include <map>
#include <optional>

#include "absl/status/status.h"
#include "viewex/graph.h"
#include "viewex/influence.h"

namespace viewex {

// Allowed number of explanation nodes per graph, inclusive on both ends.
struct CoverageBound {
  int lower = 0;
  int upper = 15;

  friend bool operator==(const CoverageBound&, const CoverageBound&) = default;
};

struct Config {
  // A node v is influenced by u when normalized(u, v) >= theta.
  double theta = 0.08;
  // Radius of the embedding-distance balls counted by the diversity term.
  double radius = 0.25;
  // Weight of diversity against influence.
  double gamma = 0.5;

  CoverageBound default_coverage;
  std::map<ClassLabel, CoverageBound> coverage;

  InfluenceOptions influence;

  // Pattern mining.
  int pattern_min_support = 2;
  int pattern_max_nodes = 5;

  // Streaming: neighborhood radius (in hops) used to probe for new patterns.
  // Unset means ceil(radius), at least 1.
  std::optional<int> hop_override;
  // Streaming: pattern cache size that triggers eviction; 0 is unbounded.
  int pattern_cache_capacity = 0;

  CoverageBound bounds(ClassLabel label) const {
    const auto it = coverage.find(label);
    return it == coverage.end() ? default_coverage : it->second;
  }

  int hops() const;

  absl::Status Validate() const;

  friend bool operator==(const Config&, const Config&) = default;
};

}  // namespace viewex

#endif  // VIEWEX_CONFIG_H_
