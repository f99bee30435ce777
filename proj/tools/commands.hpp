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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hamlearn/learner.hpp"
#include "hamlearn/oracle.hpp"

namespace hamlearn::cli {

/// Learner and oracle settings shared by `learn` and `bench`.
struct LearnOptions {
  LearnerParams params;
  double spam = 0.0;
  std::string mode = "exact";
  double trotter_eps = 0.01;
  bool opnorm = false;

  OracleConfig oracle_config(std::uint64_t seed) const;
};

/// Outcome of one learner run scored against the ground truth.
struct RunRecord {
  std::uint64_t seed = 0;
  bool success = false;
  double linf_error = 0.0;
  double l1_error = 0.0;
  double op_error = 0.0;
  LearnResult result;
};

/// Learns `truth` with oracle and learner randomness seeded by `seed`.
RunRecord run_learner(const SparseHamiltonian& truth, const LearnOptions& options, std::uint64_t seed);

/// Generator used for `--random n,s,seed` instances and bench rows.
SparseHamiltonian seeded_instance(int n, std::size_t s, std::uint64_t seed, const InstanceSpec& spec = {});

void cmd_gen(int n, std::size_t s, std::uint64_t seed, const InstanceSpec& spec, std::ostream& out);

/// Writes the learn JSON document to `json_out` and, when `csv_out` is
/// set, a header plus one row.
void cmd_learn(const SparseHamiltonian& truth, const LearnOptions& options, std::uint64_t seed, std::ostream& json_out,
               std::ostream* csv_out);

void cmd_distance(const std::string& kind, double budget, const SparseHamiltonian& h1, const SparseHamiltonian& h2,
                  std::size_t grid, std::ostream& out);

struct SweepOptions {
  std::string kind = "time";
  double budget = 1.0;
  std::size_t trials = 100;
  int n = 3;
  std::size_t terms = 4;
  std::size_t grid = 2048;
  std::uint64_t seed = 0;
};

void cmd_bounds_sweep(const SweepOptions& options, std::ostream& out);

void cmd_vv_stats(std::size_t set_size, std::size_t r, std::size_t trials, int m, std::uint64_t seed,
                  std::ostream& out);

struct BenchOptions {
  int n = 5;
  std::vector<std::size_t> s_list{2, 4, 8};
  std::vector<double> eps_list{0.2, 0.1, 0.05, 0.025};
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  LearnOptions learn;
};

void cmd_bench(const BenchOptions& options, std::ostream& out);

/// Parses "a,b,c" lists; throws UsageError on malformed entries.
std::vector<std::uint64_t> parse_uint_list(const std::string& text);
std::vector<std::size_t> parse_size_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

/// Least-squares slope of log y against log x; NaN when x has one value.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hamlearn::cli
