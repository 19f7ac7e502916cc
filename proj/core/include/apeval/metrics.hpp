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
#include <optional>
#include <span>
#include <string_view>

#include "apeval/partition.hpp"

namespace apeval {

/// `exact` is the trapezoidal area under the empirical ROC curve, identical
/// to the pair statistic (concordant + tied/2) / (n1*n0); it always lies in
/// [0,1]. `right_endpoint` is the right-endpoint Riemann form of the grouped
/// weight expansion; it converges to `exact` as n grows but is biased upward
/// under coarse ties (it can exceed 1) and at small n.
enum class AucMode { exact, right_endpoint };

/// Area under the ROC curve. Requires both classes; throws DegenerateClass.
double auc(const PartitionTable& table, AucMode mode = AucMode::exact);

/// Average precision: sum over groups of [h(k)/d(k)] * [Z_k/n1], i.e. every
/// case in a tie group receives the end-of-group cumulative precision.
/// Requires n1 >= 1; n0 = 0 is permitted and yields AP = 1.
double ap(const PartitionTable& table);

/// Count-based overloads for data that exist only as grouped counts (ordered
/// by decreasing score). `cases[k]` and `sizes[k]` are Z_k and S_k.
double auc(std::span<const std::int64_t> cases, std::span<const std::int64_t> sizes,
           AucMode mode = AucMode::exact);
double ap(std::span<const std::int64_t> cases, std::span<const std::int64_t> sizes);

struct RescaledMetrics {
  double ap_tilde;   // (AP - pi) / (1 - pi)
  double auc_tilde;  // 2*AUC - 1
};

/// Rescales both metrics so that a random test maps to 0 and a perfect test
/// to 1. Throws InvalidPrevalence unless pi lies strictly inside (0,1).
RescaledMetrics rescale(double ap, double auc, double pi);

/// Momentum estimate: rescaled AP over rescaled AUC.
struct BetaHat {
  double value;
  /// The estimate is only meaningful in [pi, 1]; outside that range the raw
  /// value is still reported (never clamped) with in_range = false.
  bool in_range;
};

/// Throws RandomDenominator when auc == 1/2 exactly.
BetaHat beta_hat(double ap, double auc, double pi);

enum class SeMethod { none, asymptotic, parametric_bootstrap, nonparametric_bootstrap };

std::string_view to_string(SeMethod method);

/// A metric value with an optional standard error and the method that
/// produced it.
struct MetricEstimate {
  double value;
  std::optional<double> se;
  SeMethod method = SeMethod::none;
};

}  // namespace apeval
