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

namespace apeval {

enum class ApFormula { exact, taylor };

/// Two-segment hit-curve model: h(t) = beta*t up to the change point alpha,
/// then linear from (alpha, alpha*beta) to (1, pi). beta is the initial true
/// positive rate (momentum), alpha is how long it lasts (stamina).
///
/// Construction enforces pi in (0,1), beta in [pi, 1] and alpha in
/// [0, pi/beta]; violations throw ModelConstraintError naming the failed
/// inequality. Every closed form below assumes these constraints.
class QuasiConcaveModel {
 public:
  QuasiConcaveModel(double alpha, double beta, double pi);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double pi() const { return pi_; }

  /// h(t) for t in [0,1]; throws DomainError outside.
  double hit(double t) const;

  /// Closed-form AUC: (beta - pi)*alpha / (2*pi*(1-pi)) + 1/2.
  double auc() const;

  /// Closed-form AP. The exact formula is
  ///   (1/pi) * [beta^2*alpha + (pi - alpha*beta)^2/(1-alpha)
  ///             - ((pi - alpha*beta)/(1-alpha)) * ((beta-pi)*alpha/(1-alpha)) * log(alpha)]
  /// with the limits AP -> pi supplied at alpha -> 0 and alpha -> 1.
  /// The taylor form substitutes log(alpha) ~ alpha - 1, giving
  ///   (beta/pi)*(beta - pi)*alpha + pi.
  double ap(ApFormula formula) const;

 private:
  double alpha_;
  double beta_;
  double pi_;
};

/// Two models sharing a prevalence have equal AUC exactly when
/// (beta1 - pi)*alpha1 == (beta2 - pi)*alpha2; compared within 1e-12.
/// Throws DomainError if the prevalences differ.
bool equal_auc_products(const QuasiConcaveModel& m1, const QuasiConcaveModel& m2);

/// Both sides of the rescaled-metric relation ap_tilde ~ beta * auc_tilde.
/// With the taylor AP the relation is an identity; with the exact AP the gap
/// reports how far the approximation is off.
struct MomentumRelation {
  double ap_tilde;
  double beta_times_auc_tilde;
  double gap;  // ap_tilde - beta_times_auc_tilde
};

MomentumRelation momentum_relation(const QuasiConcaveModel& model, ApFormula formula);

}  // namespace apeval
