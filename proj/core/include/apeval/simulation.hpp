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
#include <vector>

#include "apeval/curves.hpp"
#include "apeval/metrics.hpp"
#include "apeval/samples.hpp"

namespace apeval {

/// Binormal test model: controls score N(0,1), cases score N(delta,1).
/// round(n*pi) subjects are cases; delta controls how well the test
/// separates the classes.
struct BinormalScenario {
  std::int64_t n = 0;
  double pi = 0.0;
  double delta = 0.0;
  std::uint64_t seed = 0;
};

/// Draws the scenario's samples (cases first, then controls), deterministic
/// per seed. Throws DegenerateScenario when rounding leaves a class empty.
std::vector<LabeledSample> generate(const BinormalScenario& scenario);

/// One simulated evaluation: empirical metrics plus the hit curve and the
/// momentum overlay line f(t) = beta_hat * t (emitted as its slope).
struct ScenarioSummary {
  double ap = 0.0;
  double auc_exact = 0.0;
  double pi_hat = 0.0;
  BetaHat beta;
  Curve hit;
  double overlay_slope = 0.0;  // equals beta.value
};

/// Throws RandomDenominator if the empirical AUC is exactly 1/2.
ScenarioSummary run_scenario(const BinormalScenario& scenario);

struct ReplicateRecord {
  double ap = 0.0;
  double auc_exact = 0.0;
  /// Absent when the replicate's AUC was exactly 1/2.
  std::optional<BetaHat> beta;
};

struct ReplicateStudy {
  std::vector<ReplicateRecord> replicates;
  double mean_ap = 0.0;
  double sd_ap = 0.0;
  double mean_auc = 0.0;
  double sd_auc = 0.0;
  /// Mean over replicates with a defined momentum estimate.
  std::optional<double> mean_beta;
  std::int64_t beta_out_of_range = 0;
  std::int64_t beta_undefined = 0;
};

/// R independent runs of the scenario; replicate i draws from the substream
/// Pcg32(scenario.seed, i), so aggregates are reproducible and independent
/// of evaluation order. Requires R >= 2. Per-replicate degeneracies are
/// recorded, never thrown.
ReplicateStudy replicate_study(const BinormalScenario& scenario, std::int64_t r);

}  // namespace apeval
