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

#include "apeval/quasiconcave.hpp"

#include <cmath>
#include <string>

#include "apeval/errors.hpp"
#include "apeval/metrics.hpp"

namespace apeval {
namespace {

constexpr double kAlphaBoundary = 1e-12;
constexpr double kProductTolerance = 1e-12;

std::string fmt(double v) { return std::to_string(v); }

}  // namespace

QuasiConcaveModel::QuasiConcaveModel(double alpha, double beta, double pi)
    : alpha_(alpha), beta_(beta), pi_(pi) {
  if (!(pi > 0.0 && pi < 1.0)) {
    throw ModelConstraintError("constraint violated: 0 < pi < 1 (pi = " + fmt(pi) + ")");
  }
  if (!(beta >= pi)) {
    throw ModelConstraintError("constraint violated: beta >= pi (beta = " + fmt(beta) +
                               ", pi = " + fmt(pi) + ")");
  }
  if (!(beta <= 1.0)) {
    throw ModelConstraintError("constraint violated: beta <= 1 (beta = " + fmt(beta) + ")");
  }
  if (!(alpha >= 0.0)) {
    throw ModelConstraintError("constraint violated: alpha >= 0 (alpha = " + fmt(alpha) + ")");
  }
  if (!(alpha <= pi / beta)) {
    throw ModelConstraintError("constraint violated: alpha <= pi/beta (alpha = " + fmt(alpha) +
                               ", pi/beta = " + fmt(pi / beta) + ")");
  }
}

double QuasiConcaveModel::hit(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("hit: t must lie in [0,1], got " + fmt(t));
  }
  if (t <= alpha_) return beta_ * t;
  return (pi_ - alpha_ * beta_) / (1.0 - alpha_) * (t - alpha_) + alpha_ * beta_;
}

double QuasiConcaveModel::auc() const {
  return (beta_ - pi_) * alpha_ / (2.0 * pi_ * (1.0 - pi_)) + 0.5;
}

double QuasiConcaveModel::ap(ApFormula formula) const {
  if (formula == ApFormula::taylor) {
    return (beta_ / pi_) * (beta_ - pi_) * alpha_ + pi_;
  }
  // The exact form has removable singularities at both ends: alpha -> 0
  // makes the log term 0 * log(alpha), alpha -> 1 (only reachable with
  // beta = pi) makes the middle term 0/0. Both limits equal pi.
  if (alpha_ < kAlphaBoundary || alpha_ > 1.0 - kAlphaBoundary) return pi_;
  const double second_slope = (pi_ - alpha_ * beta_) / (1.0 - alpha_);
  const double bracket = beta_ * beta_ * alpha_ +
                         (pi_ - alpha_ * beta_) * second_slope -
                         second_slope * ((beta_ - pi_) * alpha_ / (1.0 - alpha_)) *
                             std::log(alpha_);
  return bracket / pi_;
}

bool equal_auc_products(const QuasiConcaveModel& m1, const QuasiConcaveModel& m2) {
  if (m1.pi() != m2.pi()) {
    throw DomainError("equal_auc_products: models must share a prevalence");
  }
  const double product1 = (m1.beta() - m1.pi()) * m1.alpha();
  const double product2 = (m2.beta() - m2.pi()) * m2.alpha();
  return std::abs(product1 - product2) < kProductTolerance;
}

MomentumRelation momentum_relation(const QuasiConcaveModel& model, ApFormula formula) {
  const RescaledMetrics scaled = rescale(model.ap(formula), model.auc(), model.pi());
  MomentumRelation rel;
  rel.ap_tilde = scaled.ap_tilde;
  rel.beta_times_auc_tilde = model.beta() * scaled.auc_tilde;
  rel.gap = rel.ap_tilde - rel.beta_times_auc_tilde;
  return rel;
}

}  // namespace apeval
