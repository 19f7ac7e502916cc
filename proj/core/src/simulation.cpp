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

#include "apeval/simulation.hpp"

#include <cmath>
#include <string>

#include "apeval/errors.hpp"
#include "apeval/partition.hpp"
#include "apeval/rng.hpp"

namespace apeval {
namespace {

std::int64_t case_count(const BinormalScenario& scenario) {
  if (scenario.n < 2) {
    throw DegenerateScenario("scenario needs n >= 2 subjects, got " +
                             std::to_string(scenario.n));
  }
  if (!(scenario.pi > 0.0 && scenario.pi < 1.0)) {
    throw DegenerateScenario("scenario prevalence must lie in (0,1), got " +
                             std::to_string(scenario.pi));
  }
  if (!(scenario.delta >= 0.0)) {
    throw DegenerateScenario("scenario separation must be nonnegative, got " +
                             std::to_string(scenario.delta));
  }
  const auto n1 = std::llround(static_cast<double>(scenario.n) * scenario.pi);
  if (n1 < 1 || n1 > scenario.n - 1) {
    throw DegenerateScenario("scenario rounds to an empty class: n1 = " +
                             std::to_string(n1) + " of n = " + std::to_string(scenario.n));
  }
  return n1;
}

std::vector<LabeledSample> generate_stream(const BinormalScenario& scenario,
                                           std::uint64_t stream) {
  const std::int64_t n1 = case_count(scenario);
  Pcg32 rng(scenario.seed, stream);
  std::vector<LabeledSample> samples;
  samples.reserve(static_cast<std::size_t>(scenario.n));
  for (std::int64_t i = 0; i < n1; ++i) {
    samples.push_back({rng.next_normal() + scenario.delta, 1});
  }
  for (std::int64_t i = n1; i < scenario.n; ++i) {
    samples.push_back({rng.next_normal(), 0});
  }
  return samples;
}

ScenarioSummary summarize(const std::vector<LabeledSample>& samples) {
  const PartitionTable table = partition(samples);
  ScenarioSummary summary;
  summary.ap = ap(table);
  summary.auc_exact = auc(table, AucMode::exact);
  summary.pi_hat = table.prevalence();
  summary.beta = beta_hat(summary.ap, summary.auc_exact, summary.pi_hat);
  summary.hit = hit_curve(table);
  summary.overlay_slope = summary.beta.value;
  return summary;
}

}  // namespace

std::vector<LabeledSample> generate(const BinormalScenario& scenario) {
  return generate_stream(scenario, 0);
}

ScenarioSummary run_scenario(const BinormalScenario& scenario) {
  return summarize(generate(scenario));
}

ReplicateStudy replicate_study(const BinormalScenario& scenario, std::int64_t r) {
  if (r < 2) throw DomainError("replicate_study: need at least 2 replicates");
  case_count(scenario);  // validate once up front

  ReplicateStudy study;
  study.replicates.reserve(static_cast<std::size_t>(r));

  double beta_sum = 0.0;
  std::int64_t beta_defined = 0;
  for (std::int64_t i = 0; i < r; ++i) {
    const auto samples = generate_stream(scenario, static_cast<std::uint64_t>(i));
    const PartitionTable table = partition(samples);
    ReplicateRecord record;
    record.ap = ap(table);
    record.auc_exact = auc(table, AucMode::exact);
    try {
      record.beta = beta_hat(record.ap, record.auc_exact, table.prevalence());
      beta_sum += record.beta->value;
      ++beta_defined;
      if (!record.beta->in_range) ++study.beta_out_of_range;
    } catch (const RandomDenominator&) {
      ++study.beta_undefined;
    }
    study.replicates.push_back(std::move(record));
  }

  double ap_sum = 0.0;
  double auc_sum = 0.0;
  for (const ReplicateRecord& rec : study.replicates) {
    ap_sum += rec.ap;
    auc_sum += rec.auc_exact;
  }
  const auto count = static_cast<double>(r);
  study.mean_ap = ap_sum / count;
  study.mean_auc = auc_sum / count;
  double ap_ss = 0.0;
  double auc_ss = 0.0;
  for (const ReplicateRecord& rec : study.replicates) {
    ap_ss += (rec.ap - study.mean_ap) * (rec.ap - study.mean_ap);
    auc_ss += (rec.auc_exact - study.mean_auc) * (rec.auc_exact - study.mean_auc);
  }
  study.sd_ap = std::sqrt(ap_ss / (count - 1.0));
  study.sd_auc = std::sqrt(auc_ss / (count - 1.0));
  if (beta_defined > 0) {
    study.mean_beta = beta_sum / static_cast<double>(beta_defined);
  }
  return study;
}

}  // namespace apeval
