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

#include "apeval/partition.hpp"

namespace apeval {

/// Maximum-likelihood estimates of the grouped sampling model: case counts
/// (Z_1..Z_K) ~ multinomial(n1; p), control counts ~ multinomial(n0; q),
/// n1 ~ binomial(n, pi).
struct MultinomialFit {
  std::vector<double> p_hat;  // length K, Z_k / n1
  std::vector<double> q_hat;  // length K, (S_k - Z_k) / n0
  double pi_hat;              // n1 / n
  std::int64_t n = 0;
  std::int64_t n_cases = 0;
  std::int64_t n_controls = 0;
};

/// Throws DegenerateClass unless both classes are present.
MultinomialFit fit_multinomial(const PartitionTable& table);

/// AP expressed as a function of the fitted frequencies:
///   g(p,q,pi) = sum_k p_k * pi*P_k / (pi*P_k + (1-pi)*Q_k)
/// with P_k, Q_k the cumulative sums. Agrees with ap(table) on the
/// originating table.
double ap_from_fit(const MultinomialFit& fit);

/// Gradient of g in the (K-1)-dimensional parameterization that absorbs the
/// K-th group via the multinomial constraints sum(p) = sum(q) = 1.
struct ApGradient {
  std::vector<double> d_p;  // length K-1
  std::vector<double> d_q;  // length K-1
  double d_pi = 0.0;
};

ApGradient ap_gradient(const MultinomialFit& fit);

/// Delta-method asymptotic variance of AP: (grad g)' J^-1 (grad g) with the
/// observed-information blocks inverted in closed form (the multinomial MLE
/// covariances), so zero-count groups contribute zero variance instead of a
/// singular matrix. Throws DegenerateClass.
double ap_asymptotic_variance(const PartitionTable& table);

}  // namespace apeval
