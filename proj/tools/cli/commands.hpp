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
#include <string>
#include <vector>

namespace apeval::cli {

/// Everything a subcommand needs, filled in by the argument parser. Each
/// run_* function renders its full report as a string in the configured
/// format; writing and exit codes are the caller's business.
struct RunConfig {
  std::string input_path;
  std::string label_col = "label";
  std::string score_col;                // metrics/curves; empty = the only non-label column
  std::vector<std::string> score_cols;  // rank/inflate; empty = all non-label columns
  std::vector<std::string> se_methods;  // subset of {asymptotic, pboot, npboot}
  std::int64_t bootstrap_b = 5000;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> inflate_factors;
  std::string format = "json";  // json | csv
  std::string output_path;

  // quasi
  double alpha = 0.0;
  double beta = 0.0;
  double pi = 0.0;

  // simulate
  std::int64_t sim_n = 0;
  double sim_pi = 0.0;
  double sim_delta = 0.0;
  std::int64_t replicates = 1;

  // diff-se
  double se1 = 0.0;
  double se2 = 0.0;
  std::vector<double> rhos;
};

std::string run_metrics(const RunConfig& config);
std::string run_rank(const RunConfig& config);
std::string run_curves(const RunConfig& config);
std::string run_quasi(const RunConfig& config);
std::string run_simulate(const RunConfig& config);
std::string run_inflate(const RunConfig& config);
std::string run_diff_se(const RunConfig& config);

}  // namespace apeval::cli
