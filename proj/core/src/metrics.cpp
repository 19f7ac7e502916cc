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

#include "apeval/metrics.hpp"

#include <numeric>
#include <string>

#include "apeval/errors.hpp"

namespace apeval {
namespace {

struct ClassTotals {
  std::int64_t n1 = 0;
  std::int64_t n0 = 0;
};

ClassTotals totals(std::span<const std::int64_t> cases, std::span<const std::int64_t> sizes) {
  ClassTotals t;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    t.n1 += cases[k];
    t.n0 += sizes[k] - cases[k];
  }
  return t;
}

}  // namespace

std::string_view to_string(SeMethod method) {
  switch (method) {
    case SeMethod::none: return "none";
    case SeMethod::asymptotic: return "asymptotic";
    case SeMethod::parametric_bootstrap: return "parametric-bootstrap";
    case SeMethod::nonparametric_bootstrap: return "nonparametric-bootstrap";
  }
  return "?";
}

double auc(std::span<const std::int64_t> cases, std::span<const std::int64_t> sizes,
           AucMode mode) {
  const auto [n1, n0] = totals(cases, sizes);
  if (n1 == 0 || n0 == 0) {
    throw DegenerateClass("auc requires at least one case and one control (n1=" +
                          std::to_string(n1) + ", n0=" + std::to_string(n0) + ")");
  }

  if (mode == AucMode::exact) {
    // Pair statistic in integer arithmetic: a case in an earlier (higher
    // score) group than a control is concordant, a case sharing a group with
    // a control is tied, and AUC = (concordant + tied/2) / (n1*n0).
    std::int64_t concordant = 0;
    std::int64_t tied = 0;
    std::int64_t cases_above = 0;
    for (std::size_t k = 0; k < cases.size(); ++k) {
      const std::int64_t group_controls = sizes[k] - cases[k];
      concordant += group_controls * cases_above;
      tied += cases[k] * group_controls;
      cases_above += cases[k];
    }
    return static_cast<double>(2 * concordant + tied) / static_cast<double>(2 * n1 * n0);
  }

  // Right-endpoint Riemann form of the weighted-sum expansion:
  //   (n/n0) * sum_k [h(k)/n1][S_k/n] - (1/2)(n1/n0)
  // = (2*sum_k h(k)*S_k - n1^2) / (2*n1*n0), kept in integers until the end.
  std::int64_t weighted = 0;
  std::int64_t h = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    h += cases[k];
    weighted += h * sizes[k];
  }
  return static_cast<double>(2 * weighted - n1 * n1) / static_cast<double>(2 * n1 * n0);
}

double ap(std::span<const std::int64_t> cases, std::span<const std::int64_t> sizes) {
  const std::int64_t n1 = totals(cases, sizes).n1;
  if (n1 == 0) {
    throw DegenerateClass("ap requires at least one case");
  }
  // sum_k [h(k)/d(k)] * [Z_k/n1]; cumulative counts stay integral and each
  // term performs a single division of exact integer products.
  double result = 0.0;
  std::int64_t h = 0;
  std::int64_t d = 0;
  for (std::size_t k = 0; k < cases.size(); ++k) {
    h += cases[k];
    d += sizes[k];
    if (cases[k] != 0) {
      result += static_cast<double>(h * cases[k]) / static_cast<double>(d * n1);
    }
  }
  return result;
}

double auc(const PartitionTable& table, AucMode mode) {
  return auc(table.case_counts(), table.group_sizes(), mode);
}

double ap(const PartitionTable& table) {
  return ap(table.case_counts(), table.group_sizes());
}

RescaledMetrics rescale(double ap, double auc, double pi) {
  if (!(pi > 0.0 && pi < 1.0)) {
    throw InvalidPrevalence("prevalence must lie strictly inside (0,1), got " +
                            std::to_string(pi));
  }
  return {(ap - pi) / (1.0 - pi), 2.0 * auc - 1.0};
}

BetaHat beta_hat(double ap, double auc, double pi) {
  const RescaledMetrics scaled = rescale(ap, auc, pi);
  if (scaled.auc_tilde == 0.0) throw RandomDenominator();
  const double value = scaled.ap_tilde / scaled.auc_tilde;
  return {value, value >= pi && value <= 1.0};
}

}  // namespace apeval
