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

#include <string_view>
#include <vector>

#include "apeval/partition.hpp"

namespace apeval {

enum class CurveKind { hit, roc, pr };

std::string_view to_string(CurveKind kind);

struct CurvePoint {
  double x;
  double y;
};

struct Curve {
  CurveKind kind;
  std::vector<CurvePoint> points;
};

/// Hit curve: (0,0) followed by (d(k)/n, h(k)/n) for k = 1..K, where d and h
/// are the cumulative subject and case counts. Ends at (1, prevalence).
Curve hit_curve(const PartitionTable& table);

/// ROC curve: (0,0) followed by (FPF(k), TPF(k)). Requires both classes.
Curve roc_curve(const PartitionTable& table);

/// Precision-recall curve: (Recall(k), Precision(k)) for k = 1..K.
/// Requires both classes.
Curve pr_curve(const PartitionTable& table);

}  // namespace apeval
