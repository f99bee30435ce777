// Copyright 2026 The hamlearn Authors
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
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "hamlearn/distances.hpp"
#include "hamlearn/errors.hpp"
#include "hamlearn/io.hpp"
#include "hamlearn/isolation.hpp"
#include "hamlearn/kernels.hpp"

namespace hamlearn::cli {

namespace {

std::string csv_double(double x) { return std::isfinite(x) ? io::format_double(x) : std::string(); }

const char* kLearnCsvHeader = "seed,success,linf_error,op_error,experiments,total_time,queries,min_resolution";

std::string learn_csv_row(const RunRecord& r) {
  const ResourceLedger& l = r.result.ledger;
  std::ostringstream row;
  row << r.seed << ',' << (r.success ? 1 : 0) << ',' << csv_double(r.linf_error) << ',' << csv_double(r.op_error)
      << ',' << l.experiments << ',' << csv_double(l.total_evolution_time) << ',' << l.queries << ','
      << (l.has_resolution() ? csv_double(l.min_time_resolution) : std::string());
  return row.str();
}

/// Random traceless pair member with operator norm at most one.
SparseHamiltonian unit_ball_instance(int n, std::size_t terms, Rng& rng) {
  SparseHamiltonian h = random_instance(n, terms, InstanceSpec{}, rng);
  const double norm = operator_norm(h);
  if (norm > 1.0) h *= 1.0 / norm;
  return h;
}

/// Slopes of log y against the columns of log-regressors; a regressor
/// with a single distinct value is dropped and reported as NaN.
std::vector<double> multi_loglog(const std::vector<std::vector<double>>& xs, const std::vector<double>& y) {
  std::vector<std::size_t> active;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    const auto [lo, hi] = std::minmax_element(xs[k].begin(), xs[k].end());
    if (lo != xs[k].end() && *lo != *hi) active.push_back(k);
  }
  std::vector<double> slopes(xs.size(), std::numeric_limits<double>::quiet_NaN());
  if (active.empty() || y.size() <= active.size()) return slopes;
  Eigen::MatrixXd a(static_cast<Eigen::Index>(y.size()), static_cast<Eigen::Index>(active.size() + 1));
  Eigen::VectorXd b(static_cast<Eigen::Index>(y.size()));
  for (std::size_t i = 0; i < y.size(); ++i) {
    const auto row = static_cast<Eigen::Index>(i);
    a(row, 0) = 1.0;
    for (std::size_t j = 0; j < active.size(); ++j) {
      a(row, static_cast<Eigen::Index>(j + 1)) = std::log(xs[active[j]][i]);
    }
    b(row) = std::log(y[i]);
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(b);
  for (std::size_t j = 0; j < active.size(); ++j) slopes[active[j]] = coef(static_cast<Eigen::Index>(j + 1));
  return slopes;
}

}  // namespace

OracleConfig LearnOptions::oracle_config(std::uint64_t seed) const {
  OracleConfig config;
  if (mode == "exact") {
    config.mode = OracleMode::kExact;
  } else if (mode == "trotter") {
    config.mode = OracleMode::kTrotter;
  } else {
    throw UsageError("mode must be exact or trotter");
  }
  config.spam_lambda = spam;
  config.trotter_epsilon = trotter_eps;
  config.seed = splitmix64(seed);
  config.validate();
  return config;
}

RunRecord run_learner(const SparseHamiltonian& truth, const LearnOptions& options, std::uint64_t seed) {
  options.params.validate();
  EvolutionOracle oracle(truth, options.oracle_config(seed));
  Rng rng(seed);
  RunRecord record;
  record.seed = seed;
  record.result = options.opnorm ? learn_hamiltonian_opnorm(options.params, oracle, rng)
                                 : learn_hamiltonian(options.params, oracle, rng);
  const SparseHamiltonian diff = truth - record.result.hamiltonian;
  const CoefficientNorms cn = coefficient_norms(diff);
  record.linf_error = cn.linf;
  record.l1_error = cn.l1;
  record.op_error = operator_norm(diff);
  bool subset = true;
  for (const auto& [p, c] : record.result.hamiltonian.terms()) subset = subset && truth.contains(p);
  const double error = options.opnorm ? record.op_error : record.linf_error;
  record.success = subset && error <= options.params.eps;
  return record;
}

SparseHamiltonian seeded_instance(int n, std::size_t s, std::uint64_t seed, const InstanceSpec& spec) {
  Rng rng(seed);
  return random_instance(n, s, spec, rng);
}

void cmd_gen(int n, std::size_t s, std::uint64_t seed, const InstanceSpec& spec, std::ostream& out) {
  out << io::to_json(seeded_instance(n, s, seed, spec)).dump(2) << '\n';
}

void cmd_learn(const SparseHamiltonian& truth, const LearnOptions& options, std::uint64_t seed, std::ostream& json_out,
               std::ostream* csv_out) {
  const RunRecord r = run_learner(truth, options, seed);
  nlohmann::json flags = nlohmann::json::object();
  for (const auto& [name, ok] : r.result.success_flags) flags[name] = ok;
  nlohmann::json doc = {
      {"hamiltonian", io::to_json(r.result.hamiltonian)},
      {"ledger", io::to_json(r.result.ledger)},
      {"seed", r.seed},
      {"success", r.success},
      {"errors", {{"linf", r.linf_error}, {"l1", r.l1_error}, {"op", r.op_error}}},
      {"candidates", r.result.candidates},
      {"diagnostics", flags},
  };
  json_out << doc.dump(2) << '\n';
  if (csv_out) *csv_out << kLearnCsvHeader << '\n' << learn_csv_row(r) << '\n';
}

void cmd_distance(const std::string& kind, double budget, const SparseHamiltonian& h1, const SparseHamiltonian& h2,
                  std::size_t grid, std::ostream& out) {
  DistanceResult d;
  if (kind == "time") {
    d = d_T(h1, h2, budget, grid);
  } else if (kind == "temperature") {
    d = d_B(h1, h2, budget, grid);
  } else {
    throw UsageError("kind must be time or temperature");
  }
  out << io::to_json(d).dump(2) << '\n';
}

void cmd_bounds_sweep(const SweepOptions& o, std::ostream& out) {
  if (o.kind != "time" && o.kind != "temperature" && o.kind != "gibbs") {
    throw UsageError("kind must be time, temperature or gibbs");
  }
  if (o.trials < 1) throw UsageError("trials must be positive");
  if (o.kind != "gibbs" && !(o.budget > 0.0)) throw UsageError("budget must be positive");

  struct Row {
    double op_diff = 0.0, lhs = 0.0, lower = 0.0, upper = 0.0, reference = 0.0, grid_error = 0.0;
  };
  const auto rows = kernels::map_trials<Row>(o.trials, Rng(o.seed), [&](std::size_t, Rng& rng) {
    const SparseHamiltonian h1 = unit_ball_instance(o.n, o.terms, rng);
    const SparseHamiltonian h2 = unit_ball_instance(o.n, o.terms, rng);
    Row row;
    row.op_diff = operator_norm(h1 - h2);
    row.reference = std::numeric_limits<double>::quiet_NaN();
    if (o.kind == "time") {
      const DistanceResult d = d_T(h1, h2, o.budget, o.grid);
      const double quarter = 1.0 / (4.0 * std::numbers::pi);
      row.lhs = d.value;
      row.grid_error = d.grid_error;
      row.lower = quarter * std::min(o.budget, quarter) * row.op_diff - d.grid_error;
      row.upper = std::sin(std::min(std::numbers::pi / 2.0, o.budget * row.op_diff));
    } else if (o.kind == "temperature") {
      const DistanceResult d = d_B(h1, h2, o.budget, o.grid);
      row.lhs = d.value;
      row.grid_error = d.grid_error;
      row.upper = o.budget / 2.0 * row.op_diff + d.grid_error;
    } else {
      const GibbsBoundCheck g = gibbs_trace_bound_check(h1, h2);
      row.lhs = g.lhs;
      row.upper = g.rhs_new;
      row.reference = g.rhs_old;
    }
    return row;
  });
  out << "trial,kind,budget,op_diff,lhs,lower_bound,upper_bound,reference_bound,grid_error,margin\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& r = rows[i];
    const double margin = std::min(r.lhs - r.lower, r.upper - r.lhs);
    out << i << ',' << o.kind << ',' << (o.kind == "gibbs" ? std::string() : csv_double(o.budget)) << ','
        << csv_double(r.op_diff) << ',' << csv_double(r.lhs) << ',' << csv_double(r.lower) << ','
        << csv_double(r.upper) << ',' << csv_double(r.reference) << ',' << csv_double(r.grid_error) << ','
        << csv_double(margin) << '\n';
  }
}

void cmd_vv_stats(std::size_t set_size, std::size_t r, std::size_t trials, int m, std::uint64_t seed,
                  std::ostream& out) {
  const VVStatistics v = vv_statistics(set_size, r, trials, Rng(seed), m);
  out << "set_size,r,mean,variance,p_empty,trials\n"
      << set_size << ',' << r << ',' << csv_double(v.mean) << ',' << csv_double(v.variance) << ','
      << csv_double(v.p_empty) << ',' << v.trials << '\n';
}

void cmd_bench(const BenchOptions& o, std::ostream& out) {
  if (o.s_list.empty() || o.eps_list.empty()) throw UsageError("sweep lists must be nonempty");
  if (o.trials < 1) throw UsageError("trials must be positive");
  for (double e : o.eps_list) {
    if (!(e > 0.0)) throw UsageError("eps values must be positive");
  }
  struct Cell {
    std::size_t s;
    double eps;
  };
  std::vector<Cell> cells;
  for (std::size_t s : o.s_list) {
    for (double e : o.eps_list) cells.push_back({s, e});
  }
  const std::size_t rows = cells.size() * o.trials;
  const auto records = kernels::map_trials<RunRecord>(rows, Rng(o.seed), [&](std::size_t i, Rng& rng) {
    const Cell& cell = cells[i / o.trials];
    const std::uint64_t seed = rng.next_u64();
    LearnOptions options = o.learn;
    options.params.s_bound = cell.s;
    options.params.eps = cell.eps;
    return run_learner(seeded_instance(o.n, cell.s, seed), options, seed);
  });

  out << "s,eps,seed,success,linf_error,l1_error,op_error,experiments,total_time,queries,min_resolution,ancilla\n";
  std::vector<double> xs, xe, y_exp, y_time;
  std::size_t successes = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    double mean_exp = 0.0, mean_time = 0.0;
    for (std::size_t k = 0; k < o.trials; ++k) {
      const RunRecord& r = records[c * o.trials + k];
      const ResourceLedger& l = r.result.ledger;
      out << cells[c].s << ',' << csv_double(cells[c].eps) << ',' << r.seed << ',' << (r.success ? 1 : 0) << ','
          << csv_double(r.linf_error) << ',' << csv_double(r.l1_error) << ',' << csv_double(r.op_error) << ','
          << l.experiments << ',' << csv_double(l.total_evolution_time) << ',' << l.queries << ','
          << (l.has_resolution() ? csv_double(l.min_time_resolution) : std::string()) << ',' << l.ancilla_qubits
          << '\n';
      mean_exp += static_cast<double>(l.experiments) / static_cast<double>(o.trials);
      mean_time += l.total_evolution_time / static_cast<double>(o.trials);
      successes += r.success ? 1 : 0;
    }
    xs.push_back(static_cast<double>(cells[c].s));
    xe.push_back(1.0 / cells[c].eps);
    y_exp.push_back(mean_exp);
    y_time.push_back(mean_time);
  }
  const std::vector<double> exp_slopes = multi_loglog({xs, xe}, y_exp);
  const std::vector<double> time_slopes = multi_loglog({xs, xe}, y_time);
  auto summary = [](double x) { return std::isfinite(x) ? io::format_double(x) : std::string("nan"); };
  out << "# rows," << rows << '\n';
  out << "# success_rate," << io::format_double(static_cast<double>(successes) / static_cast<double>(rows)) << '\n';
  out << "# slope_experiments_vs_s," << summary(exp_slopes[0]) << '\n';
  out << "# slope_total_time_vs_inv_eps," << summary(time_slopes[1]) << '\n';
  // s ln s vanishes at s = 1, so this fit needs every s >= 2.
  double slope_sln = std::numeric_limits<double>::quiet_NaN();
  if (*std::min_element(xs.begin(), xs.end()) >= 2.0) {
    std::vector<double> xsl;
    for (double s : xs) xsl.push_back(s * std::log(s));
    slope_sln = multi_loglog({xsl, xe}, y_exp)[0];
  }
  out << "# slope_experiments_vs_s_ln_s," << summary(slope_sln) << '\n';
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::uint64_t v = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty()) {
      throw UsageError("cannot parse \"" + item + "\" as a nonnegative integer");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
  std::vector<std::size_t> out;
  for (std::uint64_t v : parse_uint_list(text)) {
    if (v < 1) throw UsageError("expected positive integers in \"" + text + "\"");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse \"" + item + "\" as a number");
    }
    if (used != item.size() || !std::isfinite(v)) throw UsageError("cannot parse \"" + item + "\" as a number");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) { return multi_loglog({x}, y)[0]; }

}  // namespace hamlearn::cli
