// Copyright 2026 the apeval authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace apeval {

/// One subject: a continuous test score (higher = more disease-like) and a
/// binary class label (1 = case, 0 = control).
struct LabeledSample {
  double score;
  int label;
};

/// Replicates every control so that it appears `m` times (the original plus
/// m-1 copies); cases are untouched. Emulates evaluating the same scores at
/// prevalence n1 / (n1 + m*n0). Throws DomainError for m < 1.
std::vector<LabeledSample> inflate_controls(std::span<const LabeledSample> samples,
                                            std::int64_t m);

}  // namespace apeval
