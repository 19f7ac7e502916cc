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

#include "apeval/errors.hpp"
#include "apeval/partition.hpp"
#include "doctest.h"

using namespace apeval;

TEST_CASE("generate respects exact class counts") {
  for (const auto& [n, pi] : {std::pair<std::int64_t, double>{500, 0.1},
                              {500, 0.5},
                              {165, 83.0 / 165.0},
                              {7, 0.5}}) {
    const auto samples = generate({n, pi, 1.0, 11});
    std::int64_t n1 = 0;
    for (const auto& s : samples) n1 += s.label;
    CHECK(n1 == std::llround(static_cast<double>(n) * pi));
    CHECK(static_cast<std::int64_t>(samples.size()) == n);
  }
}

TEST_CASE("generate is deterministic per seed") {
  const BinormalScenario scenario{100, 0.3, 1.5, 321};
  const auto first = generate(scenario);
  const auto second = generate(scenario);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].score == second[i].score);
    CHECK(first[i].label == second[i].label);
  }
  auto different = scenario;
  different.seed = 322;
  const auto third = generate(different);
  bool any_difference = false;
  for (std::size_t i = 0; i < first.size(); ++i) {
    any_difference |= (first[i].score != third[i].score);
  }
  CHECK(any_difference);
}

TEST_CASE("degenerate scenarios are rejected") {
  CHECK_THROWS_AS(generate({10, 0.01, 1.0, 1}), DegenerateScenario);  // rounds to 0 cases
  CHECK_THROWS_AS(generate({10, 0.99, 1.0, 1}), DegenerateScenario);  // rounds to 0 controls
  CHECK_THROWS_AS(generate({1, 0.5, 1.0, 1}), DegenerateScenario);
  CHECK_THROWS_AS(generate({100, 0.5, -1.0, 1}), DegenerateScenario);
}

TEST_CASE("widely separated classes give near-perfect metrics") {
  const auto summary = run_scenario({500, 0.3, 10.0, 99});
  CHECK(summary.ap > 0.999);
  CHECK(summary.auc_exact > 0.999);
  CHECK(summary.beta.value > 0.9);
}

TEST_CASE("run_scenario summary is internally consistent") {
  const BinormalScenario scenario{300, 0.25, 1.5, 2718};
  const auto summary = run_scenario(scenario);
  const auto table = partition(generate(scenario));
  CHECK(summary.ap == ap(table));
  CHECK(summary.auc_exact == auc(table));
  CHECK(summary.pi_hat == table.prevalence());
  CHECK(summary.overlay_slope == summary.beta.value);
  CHECK(summary.hit.points.front().x == 0.0);
  CHECK(summary.hit.points.back().y == doctest::Approx(summary.pi_hat).epsilon(1e-12));
}

TEST_CASE("replicate_study aggregates and reproduces") {
  const BinormalScenario scenario{200, 0.2, 1.0, 4321};
  const auto study = replicate_study(scenario, 50);
  REQUIRE(study.replicates.size() == 50);

  // First replicate shares the scenario's own stream.
  const auto single = run_scenario(scenario);
  CHECK(study.replicates[0].ap == single.ap);
  CHECK(study.replicates[0].auc_exact == single.auc_exact);

  const auto again = replicate_study(scenario, 50);
  CHECK(again.mean_ap == study.mean_ap);
  CHECK(again.sd_ap == study.sd_ap);
  CHECK(again.mean_auc == study.mean_auc);

  double mean = 0.0;
  for (const auto& rec : study.replicates) mean += rec.ap;
  mean /= 50.0;
  CHECK(study.mean_ap == doctest::Approx(mean).epsilon(1e-12));

  CHECK_THROWS_AS(replicate_study(scenario, 1), DomainError);
}

TEST_CASE("a random test scores AUC ~ 1/2 and AP ~ pi") {
  const BinormalScenario scenario{2000, 0.1, 0.0, 555};
  const auto study = replicate_study(scenario, 60);
  CHECK(study.mean_auc == doctest::Approx(0.5).epsilon(0.03));
  CHECK(study.mean_ap == doctest::Approx(0.1).epsilon(0.15));
}

TEST_CASE("stronger separation gives larger metrics and momentum") {
  const std::int64_t n = 500;
  double previous_ap = 0.0;
  double previous_auc = 0.0;
  double previous_beta = 0.0;
  for (const double delta : {0.5, 1.0, 2.0}) {
    const auto study = replicate_study({n, 0.2, delta, 808}, 60);
    CHECK(study.mean_ap > previous_ap);
    CHECK(study.mean_auc > previous_auc);
    REQUIRE(study.mean_beta.has_value());
    CHECK(*study.mean_beta > previous_beta);
    previous_ap = study.mean_ap;
    previous_auc = study.mean_auc;
    previous_beta = *study.mean_beta;
  }
}

TEST_CASE("out-of-range momentum flags become rarer as n grows") {
  std::int64_t previous_flags = 1000000;
  for (const std::int64_t n : {100, 500, 5000}) {
    const auto study = replicate_study({n, 0.2, 0.75, 31415}, 150);
    const std::int64_t flags = study.beta_out_of_range + study.beta_undefined;
    CHECK(flags <= previous_flags);
    previous_flags = flags;
  }
}
