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

#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "apeval/errors.hpp"
#include "commands.hpp"
#include "report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;

void add_format_options(CLI::App* cmd, apeval::cli::RunConfig& config,
                        const std::string& default_format) {
  config.format = default_format;
  cmd->add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--output", config.output_path, "Output path (default: stdout)");
}

void add_input_options(CLI::App* cmd, apeval::cli::RunConfig& config) {
  cmd->add_option("--input", config.input_path, "Input CSV with a header row")->required();
  cmd->add_option("--label-col", config.label_col, "Name of the 0/1 label column");
}

void add_se_options(CLI::App* cmd, apeval::cli::RunConfig& config) {
  cmd->add_option("--se", config.se_methods,
                  "Standard errors to compute: asymptotic, pboot, npboot")
      ->delimiter(',');
  cmd->add_option("--bootstrap", config.bootstrap_b, "Bootstrap replicate count B");
  cmd->add_option("--seed", config.seed, "Seed for every randomized computation");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold-free evaluation of binary classifier scores: average precision "
               "and AUC with tie handling, standard errors, momentum diagnostics, and a "
               "binormal simulation harness."};
  app.require_subcommand(1);

  apeval::cli::RunConfig config;
  std::function<std::string()> action;

  auto* metrics = app.add_subcommand("metrics", "AP, AUC, momentum and standard errors "
                                                "for one score column");
  add_input_options(metrics, config);
  metrics->add_option("--score-col", config.score_col, "Score column name");
  add_se_options(metrics, config);
  add_format_options(metrics, config, "json");
  metrics->callback([&] { action = [&] { return apeval::cli::run_metrics(config); }; });

  auto* rank = app.add_subcommand("rank", "Rank several score columns by AP");
  add_input_options(rank, config);
  rank->add_option("--score-cols", config.score_cols,
                   "Score columns to rank (default: all non-label columns)")
      ->delimiter(',');
  add_se_options(rank, config);
  add_format_options(rank, config, "json");
  rank->callback([&] { action = [&] { return apeval::cli::run_rank(config); }; });

  auto* curves = app.add_subcommand("curves", "Export hit/ROC/PR curve points");
  add_input_options(curves, config);
  curves->add_option("--score-col", config.score_col, "Score column name");
  add_format_options(curves, config, "csv");
  curves->callback([&] { action = [&] { return apeval::cli::run_curves(config); }; });

  auto* quasi = app.add_subcommand("quasi", "Closed-form metrics of a two-segment "
                                            "hit-curve model");
  quasi->add_option("--alpha", config.alpha, "Change point (stamina)")->required();
  quasi->add_option("--beta", config.beta, "Initial true positive rate (momentum)")->required();
  quasi->add_option("--pi", config.pi, "Prevalence")->required();
  add_format_options(quasi, config, "json");
  quasi->callback([&] { action = [&] { return apeval::cli::run_quasi(config); }; });

  auto* simulate = app.add_subcommand("simulate", "Binormal score simulation");
  simulate->add_option("--n", config.sim_n, "Number of subjects")->required();
  simulate->add_option("--pi", config.sim_pi, "Prevalence")->required();
  simulate->add_option("--delta", config.sim_delta, "Class separation")->required();
  simulate->add_option("--replicates", config.replicates, "Independent repetitions");
  simulate->add_option("--seed", config.seed, "Seed");
  add_format_options(simulate, config, "json");
  simulate->callback([&] { action = [&] { return apeval::cli::run_simulate(config); }; });

  auto* inflate = app.add_subcommand("inflate", "Recompute AP/AUC with the controls "
                                                "replicated m-fold");
  add_input_options(inflate, config);
  inflate->add_option("--score-cols", config.score_cols,
                      "Score columns (default: all non-label columns)")
      ->delimiter(',');
  inflate->add_option("--inflate", config.inflate_factors, "Replication factors, e.g. 1,10,100")
      ->required()
      ->delimiter(',');
  add_format_options(inflate, config, "csv");
  inflate->callback([&] { action = [&] { return apeval::cli::run_inflate(config); }; });

  auto* diff = app.add_subcommand("diff-se", "Standard error of a difference of two "
                                             "correlated estimates");
  diff->add_option("--se1", config.se1, "First standard error")->required();
  diff->add_option("--se2", config.se2, "Second standard error")->required();
  diff->add_option("--rho", config.rhos, "Correlation values, e.g. 0.5,0.7,0.9")
      ->required()
      ->delimiter(',');
  add_format_options(diff, config, "csv");
  diff->callback([&] { action = [&] { return apeval::cli::run_diff_se(config); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    apeval::cli::write_output(config.output_path, action());
    return kExitOk;
  } catch (const apeval::DegenerateError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const apeval::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const apeval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
