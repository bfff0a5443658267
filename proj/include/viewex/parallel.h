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

// Shared-nothing fan-out over independent work items.

#ifndef VIEWEX_PARALLEL_H_
#define VIEWEX_PARALLEL_H_

#include <functional>

namespace viewex {

// Calls fn(i) for every i in [0, count) on up to `workers` threads. Callers
// write results into slot i, so the outcome does not depend on scheduling.
void ParallelFor(int count, int workers, const std::function<void(int)>& fn);

}  // namespace viewex

#endif  // VIEWEX_PARALLEL_H_
