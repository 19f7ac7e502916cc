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

#include "apeval/inference.hpp"

#include <cstddef>
#include <string>

#include "apeval/errors.hpp"
#include "apeval/metrics.hpp"

namespace apeval {
namespace {

struct Cumulatives {
  std::vector<double> p_cum;  // P_k
  std::vector<double> q_cum;  // Q_k
  std::vector<double> mix;    // C_k = pi*P_k + (1-pi)*Q_k
};

Cumulatives cumulatives(const MultinomialFit& fit) {
  const std::size_t k_count = fit.p_hat.size();
  Cumulatives c{std::vector<double>(k_count), std::vector<double>(k_count),
                std::vector<double>(k_count)};
  double p_acc = 0.0;
  double q_acc = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    p_acc += fit.p_hat[k];
    q_acc += fit.q_hat[k];
    c.p_cum[k] = p_acc;
    c.q_cum[k] = q_acc;
    c.mix[k] = fit.pi_hat * p_acc + (1.0 - fit.pi_hat) * q_acc;
  }
  return c;
}

}  // namespace

MultinomialFit fit_multinomial(const PartitionTable& table) {
  if (table.n_cases() == 0 || table.n_controls() == 0) {
    throw DegenerateClass("fit_multinomial requires at least one case and one control");
  }
  MultinomialFit fit;
  fit.n = table.n();
  fit.n_cases = table.n_cases();
  fit.n_controls = table.n_controls();
  fit.pi_hat = table.prevalence();
  const auto k_count = static_cast<std::size_t>(table.group_count());
  fit.p_hat.resize(k_count);
  fit.q_hat.resize(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    const auto ki = static_cast<std::int64_t>(k);
    fit.p_hat[k] = static_cast<double>(table.cases(ki)) / static_cast<double>(fit.n_cases);
    fit.q_hat[k] =
        static_cast<double>(table.controls(ki)) / static_cast<double>(fit.n_controls);
  }
  return fit;
}

double ap_from_fit(const MultinomialFit& fit) {
  const Cumulatives c = cumulatives(fit);
  double g = 0.0;
  for (std::size_t k = 0; k < fit.p_hat.size(); ++k) {
    if (fit.p_hat[k] == 0.0) continue;  // zero mass; also keeps 0/0 out at C_k = 0
    g += fit.p_hat[k] * (fit.pi_hat * c.p_cum[k] / c.mix[k]);
  }
  return g;
}

ApGradient ap_gradient(const MultinomialFit& fit) {
  const std::size_t k_count = fit.p_hat.size();
  const Cumulatives c = cumulatives(fit);
  const double pi = fit.pi_hat;

  ApGradient grad;
  const std::size_t k_free = k_count - 1;
  grad.d_p.assign(k_free, 0.0);
  grad.d_q.assign(k_free, 0.0);

  // d_p(k) = pi*P_k/C_k + sum_{k'>=k}^{K-1} p_k' * pi*(1-pi)*Q_k'/C_k'^2 - pi
  // d_q(k) =            - sum_{k'>=k}^{K-1} p_k' * pi*(1-pi)*P_k'/C_k'^2
  // accumulated from the back so each suffix sum is formed once.
  double suffix_p = 0.0;
  double suffix_q = 0.0;
  for (std::size_t k = k_count - 1; k-- > 0;) {
    const double common = fit.p_hat[k] * pi * (1.0 - pi) / (c.mix[k] * c.mix[k]);
    suffix_p += common * c.q_cum[k];
    suffix_q -= common * c.p_cum[k];
    grad.d_p[k] = pi * c.p_cum[k] / c.mix[k] + suffix_p - pi;
    grad.d_q[k] = suffix_q;
  }

  double d_pi = 0.0;
  for (std::size_t k = 0; k < k_count; ++k) {
    if (fit.p_hat[k] == 0.0) continue;
    d_pi += fit.p_hat[k] * c.p_cum[k] * c.q_cum[k] / (c.mix[k] * c.mix[k]);
  }
  grad.d_pi = d_pi;
  return grad;
}

double ap_asymptotic_variance(const PartitionTable& table) {
  const MultinomialFit fit = fit_multinomial(table);

  // A perfectly separating table sits where every variance block vanishes
  // identically; the integer check keeps the result exactly zero.
  if (auc(table, AucMode::exact) == 1.0) return 0.0;

  const ApGradient grad = ap_gradient(fit);
  const std::size_t k_free = grad.d_p.size();  // K - 1

  // The information blocks invert in closed form to the multinomial MLE
  // covariances: cov(p_hat) = (diag(p) - p p^T)/n1 on the free coordinates,
  // likewise for q with n0, and var(pi_hat) = pi*(1-pi)/n. The quadratic
  // form of each block is then a weighted second moment minus a squared
  // weighted mean, so zero-count groups drop out instead of dividing by
  // zero.
  double p_sq = 0.0, p_lin = 0.0, q_sq = 0.0, q_lin = 0.0;
  for (std::size_t k = 0; k < k_free; ++k) {
    p_sq += fit.p_hat[k] * grad.d_p[k] * grad.d_p[k];
    p_lin += fit.p_hat[k] * grad.d_p[k];
    q_sq += fit.q_hat[k] * grad.d_q[k] * grad.d_q[k];
    q_lin += fit.q_hat[k] * grad.d_q[k];
  }
  const double var_p = (p_sq - p_lin * p_lin) / static_cast<double>(fit.n_cases);
  const double var_q = (q_sq - q_lin * q_lin) / static_cast<double>(fit.n_controls);
  const double var_pi = (grad.d_pi * grad.d_pi) * fit.pi_hat * (1.0 - fit.pi_hat) /
                        static_cast<double>(fit.n);

  const double var = var_p + var_q + var_pi;
  return var > 0.0 ? var : 0.0;
}

}  // namespace apeval
