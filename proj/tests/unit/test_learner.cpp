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

#include "hamlearn/learner.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "hamlearn/errors.hpp"

namespace hamlearn {
namespace {

PauliString P(const char* s) { return PauliString::from_letters(s); }

TEST(LearnerConstants, Formulas) {
  EXPECT_EQ(support_rounds(1, 0.1, 64.0), 148u);
  EXPECT_EQ(shots_per_estimate(0.1, 1.0, 1.0), 75548252u);
  EXPECT_DOUBLE_EQ(small_coeff_time(0.01, 1.0), 0.125);
  EXPECT_EQ(coeff_stage_count(0.001), 3);
  EXPECT_EQ(coeff_stage_count(0.1), 1);
  EXPECT_EQ(coeff_stage_count(0.05), 2);
  EXPECT_EQ(coeff_stage_count(0.2), 1);
  EXPECT_EQ(support_time_range(2.0).first, support_time_range(2.0).second);
  LearnerParams bad;
  bad.delta = 1.0;
  EXPECT_THROW(bad.validate(), UsageError);
}

TEST(LearnSupport, ZeroHamiltonianFindsNothing) {
  EvolutionOracle oracle(SparseHamiltonian(3), OracleConfig{});
  LearnerParams params;
  params.s_bound = 2;
  params.eps = 0.1;
  Rng rng(1);
  EXPECT_TRUE(learn_support(params, oracle, rng).empty());
  const std::uint64_t t = support_rounds(2, 0.1, 64.0);
  EXPECT_EQ(oracle.ledger().experiments, t);
  EXPECT_LE(oracle.ledger().total_evolution_time, static_cast<double>(t) / 0.1);
}

TEST(LearnSupport, SingleTermIsFound) {
  int found = 0;
  for (int seed = 0; seed < 20; ++seed) {
    OracleConfig config;
    config.seed = seed;
    EvolutionOracle oracle(SparseHamiltonian(3, {{"ZII", 0.5}}), config);
    LearnerParams params;
    params.eps = 0.1;
    Rng rng(100 + seed);
    if (learn_support(params, oracle, rng).count(P("ZII"))) ++found;
  }
  EXPECT_GE(found, 18);
}

double small_coeff_run(double h, double eps, std::uint64_t seed) {
  OracleConfig config;
  config.seed = seed;
  EvolutionOracle oracle(SparseHamiltonian(2, {{"XY", h}}), config);
  RestrictedHandle handle(oracle, {}, P("XY"));
  return learn_small_coeff(handle, 0.0, eps, 0.1, 1.0, 1.0);
}

TEST(LearnSmallCoeff, MagnitudeAndSign) {
  const double eps = 0.01;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const double pos = small_coeff_run(5 * eps, eps, seed);
    EXPECT_GE(pos, 4 * eps);
    EXPECT_LE(pos, 6 * eps);
    const double neg = small_coeff_run(-5 * eps, eps, seed);
    EXPECT_GE(neg, -6 * eps);
    EXPECT_LE(neg, -4 * eps);
  }
  OracleConfig config;
  EvolutionOracle zero(SparseHamiltonian(2), config);
  RestrictedHandle handle(zero, {}, P("XY"));
  EXPECT_LE(std::abs(learn_small_coeff(handle, 0.0, eps, 0.1, 1.0, 1.0)), eps);
}

TEST(LearnCoeff, StagesAndTrace) {
  OracleConfig config;
  config.seed = 3;
  EvolutionOracle oracle(SparseHamiltonian(2, {{"ZX", 1.0}}), config);
  RestrictedHandle handle(oracle, {}, P("ZX"));
  CoeffTrace trace;
  const double est = learn_coeff(handle, 0.001, 0.1, 1.0, 1.0, &trace);
  EXPECT_LE(std::abs(est - 1.0), 0.001);
  EXPECT_EQ(trace.stage_estimates.size(), 3u);
  EXPECT_TRUE(trace.contract_held);
  // Stage times grow tenfold, so the total is about 10/9 of the last stage.
  const std::uint64_t shots = shots_per_estimate(0.1 / 3, 1.0, 1.0);
  const double last = 2.0 * static_cast<double>(shots) * small_coeff_time(0.001, 1.0);
  EXPECT_LE(oracle.ledger().total_evolution_time, 2.0 * last);
  EXPECT_NEAR(oracle.ledger().total_evolution_time / last, 1.11, 0.01);

  EvolutionOracle single(SparseHamiltonian(2, {{"ZX", 0.37}}), config);
  RestrictedHandle h2(single, {}, P("ZX"));
  EXPECT_LE(std::abs(learn_coeff(h2, 0.1, 0.1, 1.0, 1.0) - 0.37), 0.1);
  EXPECT_EQ(single.ledger().experiments, 2 * shots_per_estimate(0.1, 1.0, 1.0));
}

TEST(LearnSingleCoeffSparse, ExperimentCountIsStageSum) {
  OracleConfig config;
  config.seed = 4;
  EvolutionOracle oracle(SparseHamiltonian(3, {{"XYZ", 0.37}, {"ZZI", -0.6}}), config);
  LearnerParams params;
  params.s_bound = 2;
  params.eps = 1e-3;
  params.delta = 0.1;
  Rng rng(5);
  const SingleCoeffResult r = learn_single_coeff_sparse(P("XYZ"), params, oracle, rng);
  EXPECT_EQ(oracle.ledger().experiments, 673460916u);
  if (r.isolated) EXPECT_LE(std::abs(r.value - 0.37), 1e-3);
  EXPECT_THROW(learn_single_coeff_sparse(PauliString::identity(3), params, oracle, rng), UsageError);
}

TEST(LearnSingleCoeffSparse, AbsentTermIsNearZero) {
  OracleConfig config;
  config.seed = 6;
  EvolutionOracle oracle(SparseHamiltonian(3, {{"ZZI", -0.6}}), config);
  LearnerParams params;
  params.s_bound = 1;
  params.eps = 0.01;
  Rng rng(7);
  const SingleCoeffResult r = learn_single_coeff_sparse(P("XXX"), params, oracle, rng);
  if (r.isolated) EXPECT_LE(std::abs(r.value), 0.01);
}

TEST(LearnHamiltonian, ZeroAndSmallInstance) {
  LearnerParams params;
  params.s_bound = 2;
  params.eps = 0.1;
  Rng rng(8);
  EvolutionOracle zero(SparseHamiltonian(3), OracleConfig{});
  EXPECT_TRUE(learn_hamiltonian(params, zero, rng).hamiltonian.empty());

  const SparseHamiltonian truth(3, {{"XXI", 0.9}, {"IZY", -0.4}});
  OracleConfig config;
  config.seed = 9;
  EvolutionOracle oracle(truth, config);
  const LearnResult result = learn_hamiltonian(params, oracle, rng);
  EXPECT_LE(result.hamiltonian.sparsity(), 2u);
  EXPECT_TRUE(result.flag("support_covered"));
  for (const auto& p : all_pauli_strings(3)) {
    EXPECT_LE(std::abs(truth.coeff(p) - result.hamiltonian.coeff(p)), 0.1) << p.to_letters();
  }
  EXPECT_EQ(result.ledger, oracle.ledger());
}

}  // namespace
}  // namespace hamlearn
