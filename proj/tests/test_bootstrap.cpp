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
#include <vector>

#include "apeval/errors.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace apeval;
using namespace apeval::testing;

TEST_CASE("bootstrap SE of a perfectly separating test is zero") {
  const auto table = partition(perfect_four());
  for (const auto scheme : {BootstrapScheme::parametric, BootstrapScheme::nonparametric}) {
    const auto result = bootstrap_se(table, BootstrapMetric::ap, scheme, 500, 99);
    CHECK(result.se == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    REQUIRE(result.replicates.size() == 500);
    for (const double v : result.replicates) CHECK(v == 1.0);
  }
}

TEST_CASE("parametric bootstrap on one group approaches the binomial SE") {
  // K = 1: AP of every replicate is its resampled prevalence, so the SE must
  // approach sqrt(pi*(1-pi)/n).
  std::vector<LabeledSample> samples;
  for (int i = 0; i < 30; ++i) samples.push_back({1.0, 1});
  for (int i = 0; i < 70; ++i) samples.push_back({1.0, 0});
  const auto table = partition(samples);
  const auto result =
      bootstrap_se(table, BootstrapMetric::ap, BootstrapScheme::parametric, 5000, 4242);
  const double expected = std::sqrt(0.3 * 0.7 / 100.0);
  CHECK(result.se == doctest::Approx(expected).epsilon(0.10));
}

TEST_CASE("bootstrap is deterministic for a fixed seed") {
  Pcg32 rng(808, 0);
  const auto samples = random_dataset(rng, 40, true);
  const auto table = partition(samples);
  for (const auto scheme : {BootstrapScheme::parametric, BootstrapScheme::nonparametric}) {
    for (const auto metric : {BootstrapMetric::ap, BootstrapMetric::auc}) {
      const auto first = bootstrap_se(table, metric, scheme, 200, 777);
      const auto second = bootstrap_se(table, metric, scheme, 200, 777);
      CHECK(first.se == second.se);
      CHECK(first.replicates == second.replicates);
      CHECK(first.degenerate_redraws == second.degenerate_redraws);
      const auto other_seed = bootstrap_se(table, metric, scheme, 200, 778);
      CHECK(first.se != other_seed.se);
    }
  }
}

TEST_CASE("extending B preserves the leading replicates") {
  // Replicate i draws only from substream i, so a longer run must reproduce
  // the shorter run's replicates verbatim.
  Pcg32 rng(809, 0);
  const auto table = partition(random_dataset(rng, 40, true));
  const auto short_run =
      bootstrap_se(table, BootstrapMetric::ap, BootstrapScheme::nonparametric, 100, 55);
  const auto long_run =
      bootstrap_se(table, BootstrapMetric::ap, BootstrapScheme::nonparametric, 200, 55);
  for (std::size_t i = 0; i < 100; ++i) {
    CHECK(short_run.replicates[i] == long_run.replicates[i]);
  }
}

TEST_CASE("degenerate replicates are redrawn, keeping exactly B") {
  // A tiny unbalanced dataset loses its case class often under resampling.
  const std::vector<LabeledSample> samples{{3.0, 1}, {2.0, 0}, {1.0, 0}};
  const auto table = partition(samples);
  const auto result =
      bootstrap_se(table, BootstrapMetric::ap, BootstrapScheme::nonparametric, 400, 31);
  CHECK(result.replicates.size() == 400);
  CHECK(result.degenerate_redraws > 0);
}

TEST_CASE("bootstrap input validation") {
  const auto table = partition(alternating_four());
  CHECK_THROWS_AS(
      bootstrap_se(table, BootstrapMetric::ap, BootstrapScheme::parametric, 1, 1),
      DomainError);
  const std::vector<LabeledSample> cases_only{{2.0, 1}, {1.0, 1}};
  CHECK_THROWS_AS(bootstrap_se(partition(cases_only), BootstrapMetric::ap,
                               BootstrapScheme::parametric, 10, 1),
                  DegenerateClass);
}

TEST_CASE("difference_se reproduces the correlated-difference values") {
  CHECK(difference_se(0.02, 0.02, 0.5) == doctest::Approx(0.020).epsilon(1e-12));
  CHECK(difference_se(0.02, 0.02, 0.7) == doctest::Approx(0.0154919333848297).epsilon(1e-12));
  CHECK(difference_se(0.02, 0.02, 0.9) == doctest::Approx(0.0089442719099992).epsilon(1e-12));
  CHECK(difference_se(0.02, 0.02, 0.0) == doctest::Approx(0.02 * std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("difference_se edge cases") {
  // Perfectly correlated identical errors cancel exactly.
  for (const double s : {0.0, 0.007, 0.02, 1.5}) {
    CHECK(difference_se(s, s, 1.0) == 0.0);
  }
  CHECK_THROWS_AS(difference_se(0.02, 0.02, 1.5), InvalidCorrelation);
  CHECK_THROWS_AS(difference_se(0.02, 0.02, -1.5), InvalidCorrelation);
  CHECK_THROWS_AS(difference_se(-0.01, 0.02, 0.0), DomainError);
}
