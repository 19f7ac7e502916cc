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

#include "apeval/bootstrap.hpp"

#include <cmath>
#include <string>

#include "apeval/errors.hpp"
#include "apeval/inference.hpp"
#include "apeval/rng.hpp"

namespace apeval {
namespace {

// Metric of a resampled table given per-group case/total counts; groups that
// drew no subjects are squeezed out so the grouped formulas see S_k >= 1.
double metric_of_counts(BootstrapMetric metric, std::span<const std::int64_t> cases,
                        std::span<const std::int64_t> sizes) {
  std::vector<std::int64_t> z;
  std::vector<std::int64_t> s;
  z.reserve(cases.size());
  s.reserve(sizes.size());
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    if (sizes[k] > 0) {
      z.push_back(cases[k]);
      s.push_back(sizes[k]);
    }
  }
  return metric == BootstrapMetric::ap ? ap(z, s) : auc(z, s, AucMode::exact);
}

double sample_sd(const std::vector<double>& values) {
  const auto count = static_cast<double>(values.size());
  double mean = 0.0;
  for (const double v : values) mean += v;
  mean /= count;
  double ss = 0.0;
  for (const double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (count - 1.0));
}

}  // namespace

BootstrapResult bootstrap_se(const PartitionTable& table, BootstrapMetric metric,
                             BootstrapScheme scheme, std::int64_t b, std::uint64_t seed) {
  if (b < 2) throw DomainError("bootstrap_se: need at least 2 replicates");
  if (table.n_cases() == 0 || table.n_controls() == 0) {
    throw DegenerateClass("bootstrap_se requires at least one case and one control");
  }

  const MultinomialFit fit = fit_multinomial(table);
  const auto k_count = static_cast<std::size_t>(table.group_count());
  const std::int64_t n = table.n();

  // Nonparametric resampling of n subjects with replacement is equivalent to
  // a single multinomial over the 2K (group, class) cells with the observed
  // frequencies as weights.
  std::vector<double> cell_probs(2 * k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto ki = static_cast<std::int64_t>(k);
    cell_probs[k] = static_cast<double>(table.cases(ki)) / static_cast<double>(n);
    cell_probs[k_count + k] =
        static_cast<double>(table.controls(ki)) / static_cast<double>(n);
  }

  BootstrapResult result;
  result.replicates.reserve(static_cast<std::size_t>(b));

  std::vector<std::int64_t> z(k_count);
  std::vector<std::int64_t> zbar(k_count);
  std::vector<std::int64_t> sizes(k_count);
  std::vector<std::int64_t> cells(2 * k_count);

  for (std::int64_t rep = 0; rep < b; ++rep) {
    Pcg32 rng(seed, static_cast<std::uint64_t>(rep));
    for (;;) {
      std::int64_t n1_star = 0;
      if (scheme == BootstrapScheme::parametric) {
        n1_star = rng.next_binomial(n, fit.pi_hat);
        if (n1_star == 0 || n1_star == n) {
          ++result.degenerate_redraws;
          continue;
        }
        rng.next_multinomial(n1_star, fit.p_hat, z);
        rng.next_multinomial(n - n1_star, fit.q_hat, zbar);
      } else {
        rng.next_multinomial(n, cell_probs, cells);
        std::int64_t n1_acc = 0;
        for (std::size_t k = 0; k < k_count; ++k) {
          z[k] = cells[k];
          zbar[k] = cells[k_count + k];
          n1_acc += z[k];
        }
        n1_star = n1_acc;
        if (n1_star == 0 || n1_star == n) {
          ++result.degenerate_redraws;
          continue;
        }
      }
      for (std::size_t k = 0; k < k_count; ++k) sizes[k] = z[k] + zbar[k];
      result.replicates.push_back(metric_of_counts(metric, z, sizes));
      break;
    }
  }

  result.se = sample_sd(result.replicates);
  return result;
}

double difference_se(double se1, double se2, double rho) {
  if (se1 < 0.0 || se2 < 0.0) {
    throw DomainError("difference_se: standard errors must be nonnegative");
  }
  if (!(rho >= -1.0 && rho <= 1.0)) {
    throw InvalidCorrelation("correlation must lie in [-1,1], got " + std::to_string(rho));
  }
  const double variance = se1 * se1 + se2 * se2 - 2.0 * rho * se1 * se2;
  return variance > 0.0 ? std::sqrt(variance) : 0.0;
}

}  // namespace apeval
