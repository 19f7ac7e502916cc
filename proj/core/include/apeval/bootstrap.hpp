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
#include <vector>

#include "apeval/metrics.hpp"
#include "apeval/partition.hpp"

namespace apeval {

enum class BootstrapScheme {
  /// Resample from the fitted model: n1* ~ binomial(n, pi_hat), then group
  /// counts from multinomial(n1*; p_hat) and multinomial(n - n1*; q_hat).
  parametric,
  /// Resample n subjects from the observed data with replacement.
  nonparametric,
};

enum class BootstrapMetric { ap, auc };

struct BootstrapResult {
  double se = 0.0;                  // sample standard deviation over replicates
  std::vector<double> replicates;   // exactly B metric values
  std::int64_t degenerate_redraws = 0;  // single-class replicates that were redrawn
};

/// Bootstrap standard error over exactly B replicates. Replicate i draws
/// from the substream Pcg32(seed, i), so the result is independent of
/// evaluation order; replicates that lose a class entirely are redrawn from
/// the same substream and counted. Requires B >= 2 and both classes.
BootstrapResult bootstrap_se(const PartitionTable& table, BootstrapMetric metric,
                             BootstrapScheme scheme, std::int64_t b, std::uint64_t seed);

/// Standard error of a difference of two estimates with correlation rho:
/// sqrt(se1^2 + se2^2 - 2*rho*se1*se2). Throws InvalidCorrelation for
/// |rho| > 1 and DomainError for negative standard errors.
double difference_se(double se1, double se2, double rho);

}  // namespace apeval
