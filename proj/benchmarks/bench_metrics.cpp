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

#include <benchmark/benchmark.h>

#include <vector>

#include "apeval/bootstrap.hpp"
#include "apeval/inference.hpp"
#include "apeval/metrics.hpp"
#include "apeval/partition.hpp"
#include "apeval/simulation.hpp"

namespace {

using namespace apeval;

std::vector<LabeledSample> binormal_samples(std::int64_t n) {
  return generate({n, 0.3, 1.0, 7});
}

void BM_Partition(benchmark::State& state) {
  const auto samples = binormal_samples(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition(samples));
  }
}
BENCHMARK(BM_Partition)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_AucExact(benchmark::State& state) {
  const auto table = partition(binormal_samples(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(auc(table));
  }
}
BENCHMARK(BM_AucExact)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Ap(benchmark::State& state) {
  const auto table = partition(binormal_samples(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ap(table));
  }
}
BENCHMARK(BM_Ap)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_AsymptoticVariance(benchmark::State& state) {
  const auto table = partition(binormal_samples(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ap_asymptotic_variance(table));
  }
}
BENCHMARK(BM_AsymptoticVariance)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_NonparametricBootstrap(benchmark::State& state) {
  const auto table = partition(binormal_samples(165));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bootstrap_se(table, BootstrapMetric::ap, BootstrapScheme::nonparametric,
                     state.range(0), 99));
  }
}
BENCHMARK(BM_NonparametricBootstrap)->Arg(100)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
