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

// hamlearn command-line front end. Exit codes: 0 success, 2 usage error,
// 3 capacity or budget error, 1 anything else.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"
#include "hamlearn/errors.hpp"
#include "hamlearn/io.hpp"
#include "hamlearn/kernels.hpp"

namespace {

using namespace hamlearn;

constexpr int kUsageExit = 2;
constexpr int kCapacityExit = 3;

/// Output sink: a file when a path is given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void add_learn_flags(CLI::App& cmd, cli::LearnOptions& o) {
  cmd.add_option("--delta", o.params.delta, "failure probability")->capture_default_str();
  cmd.add_option("--spam", o.spam, "depolarizing SPAM weight lambda")->capture_default_str();
  cmd.add_option("--mode", o.mode, "oracle mode")->check(CLI::IsMember({"exact", "trotter"}))->capture_default_str();
  cmd.add_option("--trotter-eps", o.trotter_eps, "product-formula diamond budget")->capture_default_str();
  cmd.add_option("--taylor-c", o.params.taylor_C, "Taylor remainder constant C")->capture_default_str();
  cmd.add_option("--c0", o.params.support_rounds_c0, "support-round constant")->capture_default_str();
  cmd.add_option("--c1", o.params.shots_c1, "shot-count multiplier")->capture_default_str();
  cmd.add_flag("--opnorm", o.opnorm, "learn to operator-norm accuracy eps");
}

int run(int argc, char** argv) {
  CLI::App app{"Sparse Hamiltonian learning and Hamiltonian distances"};
  app.require_subcommand(1);
  app.fallthrough();
  int threads = 0;
  app.add_option("--threads", threads, "OpenMP threads (0 keeps OMP_NUM_THREADS)");

  // gen
  auto* gen = app.add_subcommand("gen", "random sparse Hamiltonian as JSON");
  int gen_n = 4;
  std::size_t gen_s = 3;
  std::uint64_t gen_seed = 0;
  InstanceSpec gen_spec;
  std::string gen_out;
  gen->add_option("--n", gen_n, "qubits")->required();
  gen->add_option("--s", gen_s, "number of terms")->required();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--coeff-range", gen_spec.coeff_range)->capture_default_str();
  gen->add_option("--coeff-floor", gen_spec.coeff_floor)->capture_default_str();
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // learn
  auto* learn = app.add_subcommand("learn", "learn a Hamiltonian from the simulated oracle");
  cli::LearnOptions learn_opts;
  std::string learn_h, learn_random, learn_out, learn_csv;
  std::uint64_t learn_seed = 0;
  auto* h_opt = learn->add_option("--hamiltonian", learn_h, "ground-truth Hamiltonian JSON");
  auto* r_opt = learn->add_option("--random", learn_random, "random instance n,s,seed");
  h_opt->excludes(r_opt);
  learn->add_option("--eps", learn_opts.params.eps, "target accuracy")->capture_default_str();
  learn->add_option("--s-bound", learn_opts.params.s_bound, "sparsity bound (default: true sparsity)");
  learn->add_option("--seed", learn_seed, "learner and oracle seed")->capture_default_str();
  learn->add_option("--out", learn_out, "JSON output path (default stdout)");
  learn->add_option("--csv", learn_csv, "CSV output path (header plus one row)");
  add_learn_flags(*learn, learn_opts);

  // distance
  auto* distance = app.add_subcommand("distance", "time- or temperature-constrained distance");
  std::string dist_kind, dist_h1, dist_h2;
  double dist_budget = 1.0;
  std::size_t dist_grid = kDefaultDistanceGrid;
  distance->add_option("--kind", dist_kind)->required()->check(CLI::IsMember({"time", "temperature"}));
  distance->add_option("--budget", dist_budget, "T or B")->required();
  distance->add_option("--h1", dist_h1)->required();
  distance->add_option("--h2", dist_h2)->required();
  distance->add_option("--grid", dist_grid)->capture_default_str();

  // bounds-sweep
  auto* sweep = app.add_subcommand("bounds-sweep", "distance bounds on random pairs as CSV");
  cli::SweepOptions sweep_opts;
  sweep->add_option("--kind", sweep_opts.kind)
      ->check(CLI::IsMember({"time", "temperature", "gibbs"}))
      ->capture_default_str();
  sweep->add_option("--budget", sweep_opts.budget)->capture_default_str();
  sweep->add_option("--trials", sweep_opts.trials)->capture_default_str();
  sweep->add_option("--n", sweep_opts.n)->capture_default_str();
  sweep->add_option("--terms", sweep_opts.terms)->capture_default_str();
  sweep->add_option("--grid", sweep_opts.grid)->capture_default_str();
  sweep->add_option("--seed", sweep_opts.seed)->capture_default_str();

  // vv-stats
  auto* vv = app.add_subcommand("vv-stats", "Valiant-Vazirani survivor statistics as CSV");
  std::size_t vv_set = 4, vv_r = 2, vv_trials = 100000;
  int vv_m = 20;
  std::uint64_t vv_seed = 0;
  vv->add_option("--set-size", vv_set)->capture_default_str();
  vv->add_option("--r", vv_r)->capture_default_str();
  vv->add_option("--trials", vv_trials)->capture_default_str();
  vv->add_option("--m", vv_m, "bit width of the ambient space")->capture_default_str();
  vv->add_option("--seed", vv_seed)->capture_default_str();

  // bench
  auto* bench = app.add_subcommand("bench", "learner sweep over s and eps as CSV");
  cli::BenchOptions bench_opts;
  std::string bench_s = "2,4,8", bench_eps = "0.2,0.1,0.05,0.025", bench_out;
  bench->add_option("--n", bench_opts.n)->capture_default_str();
  bench->add_option("--s-list", bench_s)->capture_default_str();
  bench->add_option("--eps-list", bench_eps)->capture_default_str();
  bench->add_option("--trials", bench_opts.trials)->capture_default_str();
  bench->add_option("--seed", bench_opts.seed)->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output path (default stdout)");
  add_learn_flags(*bench, bench_opts.learn);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageExit;
  }
  if (threads < 0) throw UsageError("--threads must be nonnegative");
  if (threads > 0) kernels::set_num_threads(threads);

  if (gen->parsed()) {
    Sink sink(gen_out);
    cli::cmd_gen(gen_n, gen_s, gen_seed, gen_spec, sink.stream());
  } else if (learn->parsed()) {
    SparseHamiltonian truth;
    if (!learn_h.empty()) {
      truth = io::read_hamiltonian(learn_h);
    } else if (!learn_random.empty()) {
      const auto parts = cli::parse_uint_list(learn_random);
      if (parts.size() != 3) throw UsageError("--random expects n,s,seed");
      if (parts[0] < 1 || parts[0] > 62) throw UsageError("--random qubit count out of range");
      truth = cli::seeded_instance(static_cast<int>(parts[0]), static_cast<std::size_t>(parts[1]), parts[2]);
    } else {
      throw UsageError("learn needs --hamiltonian or --random");
    }
    if (learn->count("--s-bound") == 0) learn_opts.params.s_bound = std::max<std::size_t>(1, truth.sparsity());
    Sink json(learn_out);
    std::unique_ptr<Sink> csv;
    if (!learn_csv.empty()) csv = std::make_unique<Sink>(learn_csv);
    cli::cmd_learn(truth, learn_opts, learn_seed, json.stream(), csv ? &csv->stream() : nullptr);
  } else if (distance->parsed()) {
    cli::cmd_distance(dist_kind, dist_budget, io::read_hamiltonian(dist_h1), io::read_hamiltonian(dist_h2),
                      dist_grid, std::cout);
  } else if (sweep->parsed()) {
    cli::cmd_bounds_sweep(sweep_opts, std::cout);
  } else if (vv->parsed()) {
    cli::cmd_vv_stats(vv_set, vv_r, vv_trials, vv_m, vv_seed, std::cout);
  } else if (bench->parsed()) {
    bench_opts.s_list = cli::parse_size_list(bench_s);
    bench_opts.eps_list = cli::parse_double_list(bench_eps);
    Sink sink(bench_out);
    cli::cmd_bench(bench_opts, sink.stream());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hamlearn::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageExit;
  } catch (const hamlearn::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacityExit;
  } catch (const hamlearn::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << '\n';
    return kCapacityExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
