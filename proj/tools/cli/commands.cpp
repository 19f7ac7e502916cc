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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "apeval/bootstrap.hpp"
#include "apeval/curves.hpp"
#include "apeval/errors.hpp"
#include "apeval/inference.hpp"
#include "apeval/metrics.hpp"
#include "apeval/partition.hpp"
#include "apeval/quasiconcave.hpp"
#include "apeval/samples.hpp"
#include "apeval/simulation.hpp"
#include "csv.hpp"
#include "json.hpp"
#include "report.hpp"

namespace apeval::cli {
namespace {

using nlohmann::json;

struct SeSelection {
  bool asymptotic = false;
  bool pboot = false;
  bool npboot = false;
  bool any() const { return asymptotic || pboot || npboot; }
};

SeSelection parse_se_methods(const RunConfig& config) {
  SeSelection sel;
  for (const auto& method : config.se_methods) {
    if (method == "asymptotic") {
      sel.asymptotic = true;
    } else if (method == "pboot") {
      sel.pboot = true;
    } else if (method == "npboot") {
      sel.npboot = true;
    } else {
      throw InputError("unknown SE method '" + method +
                       "'; expected asymptotic, pboot or npboot");
    }
  }
  if ((sel.pboot || sel.npboot) && config.bootstrap_b < 2) {
    throw InputError("bootstrap requires B >= 2, got " +
                     format_int(config.bootstrap_b));
  }
  return sel;
}

std::string pick_score_column(const CsvTable& table, const RunConfig& config) {
  if (!config.score_col.empty()) return config.score_col;
  const auto candidates = score_columns(table, config.label_col);
  if (candidates.size() != 1) {
    std::string names;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (i > 0) names += ", ";
      names += "'" + candidates[i] + "'";
    }
    throw CsvError("several score columns (" + names + "); pick one with --score-col");
  }
  return candidates[0];
}

std::vector<std::string> pick_score_columns(const CsvTable& table, const RunConfig& config) {
  if (!config.score_cols.empty()) return config.score_cols;
  return score_columns(table, config.label_col);
}

/// Standard errors for one table, as requested. Keys follow the method
/// names; AUC has no asymptotic route.
struct SeReport {
  std::optional<double> ap_asymptotic;
  std::optional<double> ap_pboot;
  std::optional<double> ap_npboot;
  std::optional<double> auc_pboot;
  std::optional<double> auc_npboot;
  std::int64_t pboot_redraws = 0;
  std::int64_t npboot_redraws = 0;
};

SeReport compute_se(const PartitionTable& table, const SeSelection& sel,
                    const RunConfig& config) {
  SeReport report;
  if (sel.asymptotic) {
    report.ap_asymptotic = std::sqrt(ap_asymptotic_variance(table));
  }
  if (sel.pboot) {
    const auto ap_result = bootstrap_se(table, BootstrapMetric::ap,
                                        BootstrapScheme::parametric, config.bootstrap_b,
                                        config.seed);
    report.ap_pboot = ap_result.se;
    report.pboot_redraws = ap_result.degenerate_redraws;
    report.auc_pboot = bootstrap_se(table, BootstrapMetric::auc, BootstrapScheme::parametric,
                                    config.bootstrap_b, config.seed)
                           .se;
  }
  if (sel.npboot) {
    const auto ap_result = bootstrap_se(table, BootstrapMetric::ap,
                                        BootstrapScheme::nonparametric, config.bootstrap_b,
                                        config.seed);
    report.ap_npboot = ap_result.se;
    report.npboot_redraws = ap_result.degenerate_redraws;
    report.auc_npboot = bootstrap_se(table, BootstrapMetric::auc,
                                     BootstrapScheme::nonparametric, config.bootstrap_b,
                                     config.seed)
                            .se;
  }
  return report;
}

json se_to_json(const SeReport& se) {
  json out;
  json ap_block;
  if (se.ap_asymptotic) ap_block["asymptotic"] = *se.ap_asymptotic;
  if (se.ap_pboot) ap_block["parametric-bootstrap"] = *se.ap_pboot;
  if (se.ap_npboot) ap_block["nonparametric-bootstrap"] = *se.ap_npboot;
  json auc_block;
  if (se.auc_pboot) auc_block["parametric-bootstrap"] = *se.auc_pboot;
  if (se.auc_npboot) auc_block["nonparametric-bootstrap"] = *se.auc_npboot;
  out["ap"] = std::move(ap_block);
  out["auc"] = std::move(auc_block);
  return out;
}

json meta_block(const RunConfig& config, const std::string& command) {
  json meta;
  meta["command"] = command;
  if (!config.input_path.empty()) meta["input"] = config.input_path;
  meta["seed"] = config.seed;
  if (!config.se_methods.empty()) {
    meta["se_methods"] = config.se_methods;
    meta["bootstrap_b"] = config.bootstrap_b;
  }
  return meta;
}

/// Metric bundle shared by metrics/rank/inflate.
struct TableMetrics {
  double ap_value = 0.0;
  double auc_exact = 0.0;
  double auc_right_endpoint = 0.0;
  double pi = 0.0;
  std::optional<BetaHat> beta;
};

TableMetrics compute_metrics(const PartitionTable& table) {
  TableMetrics m;
  m.ap_value = ap(table);
  m.auc_exact = auc(table, AucMode::exact);
  m.auc_right_endpoint = auc(table, AucMode::right_endpoint);
  m.pi = table.prevalence();
  try {
    m.beta = beta_hat(m.ap_value, m.auc_exact, m.pi);
  } catch (const RandomDenominator&) {
    // leave beta empty: AUC == 1/2 exactly
  }
  return m;
}

void append_kv(std::string& out, const std::string& key, const std::string& value) {
  out += key;
  out += ',';
  out += value;
  out += '\n';
}

std::string csv_se_rows(const SeReport& se) {
  std::string out;
  if (se.ap_asymptotic) append_kv(out, "se_ap_asymptotic", format_double(*se.ap_asymptotic));
  if (se.ap_pboot) append_kv(out, "se_ap_pboot", format_double(*se.ap_pboot));
  if (se.ap_npboot) append_kv(out, "se_ap_npboot", format_double(*se.ap_npboot));
  if (se.auc_pboot) append_kv(out, "se_auc_pboot", format_double(*se.auc_pboot));
  if (se.auc_npboot) append_kv(out, "se_auc_npboot", format_double(*se.auc_npboot));
  return out;
}

}  // namespace

std::string run_metrics(const RunConfig& config) {
  const auto table_csv = load_csv(config.input_path);
  const auto score_col = pick_score_column(table_csv, config);
  const auto samples = extract_samples(table_csv, config.label_col, score_col);
  const auto table = partition(samples);
  const auto sel = parse_se_methods(config);
  const auto m = compute_metrics(table);
  const auto se = compute_se(table, sel, config);

  if (config.format == "csv") {
    std::string out;
    append_kv(out, "ap", format_double(m.ap_value));
    append_kv(out, "auc_exact", format_double(m.auc_exact));
    append_kv(out, "auc_right_endpoint", format_double(m.auc_right_endpoint));
    append_kv(out, "pi", format_double(m.pi));
    append_kv(out, "n", format_int(table.n()));
    append_kv(out, "n1", format_int(table.n_cases()));
    append_kv(out, "n0", format_int(table.n_controls()));
    append_kv(out, "k_groups", format_int(table.group_count()));
    if (m.beta) {
      append_kv(out, "beta_hat", format_double(m.beta->value));
      append_kv(out, "beta_hat_in_range", m.beta->in_range ? "true" : "false");
    } else {
      append_kv(out, "beta_hat", "undefined");
    }
    out += csv_se_rows(se);
    return out;
  }

  json root;
  json metrics;
  metrics["ap"] = m.ap_value;
  metrics["auc_exact"] = m.auc_exact;
  metrics["auc_right_endpoint"] = m.auc_right_endpoint;
  metrics["pi"] = m.pi;
  metrics["n"] = table.n();
  metrics["n1"] = table.n_cases();
  metrics["n0"] = table.n_controls();
  metrics["k_groups"] = table.group_count();
  metrics["beta_hat"] = m.beta ? json(m.beta->value) : json(nullptr);
  root["metrics"] = std::move(metrics);
  root["se"] = se_to_json(se);
  json flags;
  flags["beta_hat_in_range"] = m.beta ? json(m.beta->in_range) : json(nullptr);
  if (sel.pboot) flags["parametric_bootstrap_redraws"] = se.pboot_redraws;
  if (sel.npboot) flags["nonparametric_bootstrap_redraws"] = se.npboot_redraws;
  root["flags"] = std::move(flags);
  json meta = meta_block(config, "metrics");
  meta["label_col"] = config.label_col;
  meta["score_col"] = score_col;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

std::string run_rank(const RunConfig& config) {
  const auto table_csv = load_csv(config.input_path);
  const auto columns = pick_score_columns(table_csv, config);
  const auto sel = parse_se_methods(config);

  struct RankedRow {
    std::string column;
    TableMetrics m;
    SeReport se;
  };
  std::vector<RankedRow> rows;
  std::vector<std::pair<std::string, std::string>> skipped;

  for (const auto& column : columns) {
    try {
      const auto samples = extract_samples(table_csv, config.label_col, column);
      const auto table = partition(samples);
      RankedRow row;
      row.column = column;
      row.m = compute_metrics(table);
      row.se = compute_se(table, sel, config);
      rows.push_back(std::move(row));
    } catch (const Error& e) {
      skipped.emplace_back(column, e.what());
    }
  }
  if (rows.empty()) {
    throw InputError("no usable score columns" +
                     (skipped.empty() ? std::string{}
                                      : "; first failure: " + skipped.front().second));
  }

  std::sort(rows.begin(), rows.end(), [](const RankedRow& a, const RankedRow& b) {
    if (a.m.ap_value != b.m.ap_value) return a.m.ap_value > b.m.ap_value;
    if (a.m.auc_exact != b.m.auc_exact) return a.m.auc_exact > b.m.auc_exact;
    return a.column < b.column;
  });

  if (config.format == "csv") {
    std::string out = "column,ap,auc_exact,auc_right_endpoint,pi";
    if (sel.asymptotic) out += ",se_ap_asymptotic";
    if (sel.pboot) out += ",se_ap_pboot,se_auc_pboot";
    if (sel.npboot) out += ",se_ap_npboot,se_auc_npboot";
    out += '\n';
    for (const auto& row : rows) {
      out += csv_escape(row.column);
      out += ',' + format_double(row.m.ap_value);
      out += ',' + format_double(row.m.auc_exact);
      out += ',' + format_double(row.m.auc_right_endpoint);
      out += ',' + format_double(row.m.pi);
      if (sel.asymptotic) out += ',' + format_double(*row.se.ap_asymptotic);
      if (sel.pboot) {
        out += ',' + format_double(*row.se.ap_pboot);
        out += ',' + format_double(*row.se.auc_pboot);
      }
      if (sel.npboot) {
        out += ',' + format_double(*row.se.ap_npboot);
        out += ',' + format_double(*row.se.auc_npboot);
      }
      out += '\n';
    }
    return out;
  }

  json root;
  json ranking = json::array();
  for (const auto& row : rows) {
    json entry;
    entry["column"] = row.column;
    entry["ap"] = row.m.ap_value;
    entry["auc_exact"] = row.m.auc_exact;
    entry["auc_right_endpoint"] = row.m.auc_right_endpoint;
    entry["pi"] = row.m.pi;
    entry["beta_hat"] = row.m.beta ? json(row.m.beta->value) : json(nullptr);
    entry["se"] = se_to_json(row.se);
    ranking.push_back(std::move(entry));
  }
  root["ranking"] = std::move(ranking);
  json skipped_json = json::array();
  for (const auto& [column, reason] : skipped) {
    skipped_json.push_back({{"column", column}, {"error", reason}});
  }
  root["skipped"] = std::move(skipped_json);
  json meta = meta_block(config, "rank");
  meta["label_col"] = config.label_col;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

std::string run_curves(const RunConfig& config) {
  const auto table_csv = load_csv(config.input_path);
  const auto score_col = pick_score_column(table_csv, config);
  const auto samples = extract_samples(table_csv, config.label_col, score_col);
  const auto table = partition(samples);

  const Curve curves[] = {hit_curve(table), roc_curve(table), pr_curve(table)};

  if (config.format == "csv") {
    std::string out = "kind,x,y\n";
    for (const auto& curve : curves) {
      for (const auto& point : curve.points) {
        out += std::string(to_string(curve.kind)) + ',' + format_double(point.x) + ',' +
               format_double(point.y) + '\n';
      }
    }
    return out;
  }

  json root;
  json block;
  for (const auto& curve : curves) {
    json points = json::array();
    for (const auto& point : curve.points) {
      points.push_back({point.x, point.y});
    }
    block[std::string(to_string(curve.kind))] = std::move(points);
  }
  root["curves"] = std::move(block);
  json meta = meta_block(config, "curves");
  meta["label_col"] = config.label_col;
  meta["score_col"] = score_col;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

std::string run_quasi(const RunConfig& config) {
  const QuasiConcaveModel model(config.alpha, config.beta, config.pi);
  const double auc_value = model.auc();
  const double ap_exact = model.ap(ApFormula::exact);
  const double ap_taylor = model.ap(ApFormula::taylor);
  const auto rel_exact = momentum_relation(model, ApFormula::exact);
  const auto rel_taylor = momentum_relation(model, ApFormula::taylor);
  const double auc_tilde = rescale(ap_exact, auc_value, config.pi).auc_tilde;

  if (config.format == "csv") {
    std::string out;
    append_kv(out, "auc", format_double(auc_value));
    append_kv(out, "ap_exact", format_double(ap_exact));
    append_kv(out, "ap_taylor", format_double(ap_taylor));
    append_kv(out, "ap_tilde_exact", format_double(rel_exact.ap_tilde));
    append_kv(out, "ap_tilde_taylor", format_double(rel_taylor.ap_tilde));
    append_kv(out, "auc_tilde", format_double(auc_tilde));
    append_kv(out, "momentum_gap_exact", format_double(rel_exact.gap));
    append_kv(out, "momentum_gap_taylor", format_double(rel_taylor.gap));
    return out;
  }

  json root;
  json metrics;
  metrics["auc"] = auc_value;
  metrics["ap_exact"] = ap_exact;
  metrics["ap_taylor"] = ap_taylor;
  metrics["ap_tilde_exact"] = rel_exact.ap_tilde;
  metrics["ap_tilde_taylor"] = rel_taylor.ap_tilde;
  metrics["auc_tilde"] = auc_tilde;
  metrics["momentum_gap_exact"] = rel_exact.gap;
  metrics["momentum_gap_taylor"] = rel_taylor.gap;
  root["metrics"] = std::move(metrics);
  json meta = meta_block(config, "quasi");
  meta["alpha"] = config.alpha;
  meta["beta"] = config.beta;
  meta["pi"] = config.pi;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

std::string run_simulate(const RunConfig& config) {
  const BinormalScenario scenario{config.sim_n, config.sim_pi, config.sim_delta, config.seed};

  if (config.replicates <= 1) {
    const auto summary = run_scenario(scenario);
    if (config.format == "csv") {
      std::string out;
      append_kv(out, "ap", format_double(summary.ap));
      append_kv(out, "auc_exact", format_double(summary.auc_exact));
      append_kv(out, "pi_hat", format_double(summary.pi_hat));
      append_kv(out, "beta_hat", format_double(summary.beta.value));
      append_kv(out, "beta_hat_in_range", summary.beta.in_range ? "true" : "false");
      append_kv(out, "overlay_slope", format_double(summary.overlay_slope));
      out += "\nkind,x,y\n";
      for (const auto& point : summary.hit.points) {
        out += "hit," + format_double(point.x) + ',' + format_double(point.y) + '\n';
      }
      return out;
    }
    json root;
    json metrics;
    metrics["ap"] = summary.ap;
    metrics["auc_exact"] = summary.auc_exact;
    metrics["pi_hat"] = summary.pi_hat;
    metrics["beta_hat"] = summary.beta.value;
    root["metrics"] = std::move(metrics);
    json flags;
    flags["beta_hat_in_range"] = summary.beta.in_range;
    root["flags"] = std::move(flags);
    json points = json::array();
    for (const auto& point : summary.hit.points) {
      points.push_back({point.x, point.y});
    }
    root["curves"] = json{{"hit", std::move(points)}};
    root["overlay_slope"] = summary.overlay_slope;
    json meta = meta_block(config, "simulate");
    meta["n"] = scenario.n;
    meta["pi"] = scenario.pi;
    meta["delta"] = scenario.delta;
    root["meta"] = std::move(meta);
    return root.dump(2) + "\n";
  }

  const auto study = replicate_study(scenario, config.replicates);
  if (config.format == "csv") {
    std::string out = "replicate,ap,auc_exact,beta_hat,beta_hat_in_range\n";
    for (std::size_t i = 0; i < study.replicates.size(); ++i) {
      const auto& rec = study.replicates[i];
      out += format_int(static_cast<std::int64_t>(i)) + ',' + format_double(rec.ap) + ',' +
             format_double(rec.auc_exact) + ',';
      if (rec.beta) {
        out += format_double(rec.beta->value);
        out += rec.beta->in_range ? ",true" : ",false";
      } else {
        out += "undefined,undefined";
      }
      out += '\n';
    }
    out += '\n';
    append_kv(out, "mean_ap", format_double(study.mean_ap));
    append_kv(out, "sd_ap", format_double(study.sd_ap));
    append_kv(out, "mean_auc", format_double(study.mean_auc));
    append_kv(out, "sd_auc", format_double(study.sd_auc));
    if (study.mean_beta) append_kv(out, "mean_beta_hat", format_double(*study.mean_beta));
    append_kv(out, "beta_out_of_range", format_int(study.beta_out_of_range));
    append_kv(out, "beta_undefined", format_int(study.beta_undefined));
    return out;
  }

  json root;
  json replicates = json::array();
  for (const auto& rec : study.replicates) {
    json entry;
    entry["ap"] = rec.ap;
    entry["auc_exact"] = rec.auc_exact;
    entry["beta_hat"] = rec.beta ? json(rec.beta->value) : json(nullptr);
    entry["beta_hat_in_range"] = rec.beta ? json(rec.beta->in_range) : json(nullptr);
    replicates.push_back(std::move(entry));
  }
  root["replicates"] = std::move(replicates);
  json aggregates;
  aggregates["mean_ap"] = study.mean_ap;
  aggregates["sd_ap"] = study.sd_ap;
  aggregates["mean_auc"] = study.mean_auc;
  aggregates["sd_auc"] = study.sd_auc;
  aggregates["mean_beta_hat"] = study.mean_beta ? json(*study.mean_beta) : json(nullptr);
  aggregates["beta_out_of_range"] = study.beta_out_of_range;
  aggregates["beta_undefined"] = study.beta_undefined;
  root["aggregates"] = std::move(aggregates);
  json meta = meta_block(config, "simulate");
  meta["n"] = scenario.n;
  meta["pi"] = scenario.pi;
  meta["delta"] = scenario.delta;
  meta["replicates"] = config.replicates;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

std::string run_inflate(const RunConfig& config) {
  if (config.inflate_factors.empty()) {
    throw InputError("inflate requires at least one factor, e.g. --inflate 1,10,100");
  }
  for (const auto m : config.inflate_factors) {
    if (m < 1) throw InputError("inflation factors must be >= 1, got " + format_int(m));
  }
  const auto table_csv = load_csv(config.input_path);
  const auto columns = pick_score_columns(table_csv, config);

  struct InflateRow {
    std::string column;
    std::int64_t m;
    double ap_value;
    double auc_exact;
    double pi;
  };
  std::vector<InflateRow> rows;
  for (const auto& column : columns) {
    const auto samples = extract_samples(table_csv, config.label_col, column);
    for (const auto m : config.inflate_factors) {
      const auto inflated = partition(inflate_controls(samples, m));
      rows.push_back({column, m, ap(inflated), auc(inflated), inflated.prevalence()});
    }
  }

  if (config.format == "csv") {
    std::string out = "column,m,ap,auc_exact,pi\n";
    for (const auto& row : rows) {
      out += csv_escape(row.column) + ',' + format_int(row.m) + ',' +
             format_double(row.ap_value) + ',' + format_double(row.auc_exact) + ',' +
             format_double(row.pi) + '\n';
    }
    return out;
  }

  json root;
  json list = json::array();
  for (const auto& row : rows) {
    json entry;
    entry["column"] = row.column;
    entry["m"] = row.m;
    entry["ap"] = row.ap_value;
    entry["auc_exact"] = row.auc_exact;
    entry["pi"] = row.pi;
    list.push_back(std::move(entry));
  }
  root["inflation"] = std::move(list);
  json meta = meta_block(config, "inflate");
  meta["label_col"] = config.label_col;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

std::string run_diff_se(const RunConfig& config) {
  if (config.rhos.empty()) {
    throw InputError("diff-se requires at least one correlation, e.g. --rho 0.5,0.7,0.9");
  }

  if (config.format == "csv") {
    std::string out = "rho,se_diff\n";
    for (const double rho : config.rhos) {
      out += format_double(rho) + ',' + format_double(difference_se(config.se1, config.se2, rho)) +
             '\n';
    }
    return out;
  }

  json root;
  json list = json::array();
  for (const double rho : config.rhos) {
    list.push_back({{"rho", rho}, {"se", difference_se(config.se1, config.se2, rho)}});
  }
  root["difference_se"] = std::move(list);
  json meta = meta_block(config, "diff-se");
  meta["se1"] = config.se1;
  meta["se2"] = config.se2;
  root["meta"] = std::move(meta);
  return root.dump(2) + "\n";
}

}  // namespace apeval::cli
