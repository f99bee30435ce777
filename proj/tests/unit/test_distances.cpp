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

#include "hamlearn/distances.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hamlearn/errors.hpp"
#include "hamlearn/linalg.hpp"
#include "reference.hpp"

namespace hamlearn {
namespace {

constexpr double kPi = std::numbers::pi;

Eigen::MatrixXcd rotation_z(double angle) {
  return testing::expm_evolution(testing::kron_pauli("Z"), angle);
}

TEST(HalfDiamond, ClosedForms) {
  const Eigen::MatrixXcd v = rotation_z(0.3);
  EXPECT_NEAR(half_diamond_unitary(v, v), 0.0, 1e-12);
  for (double et : {0.05, 0.2, 0.5, 0.75}) {
    EXPECT_NEAR(half_diamond_unitary(rotation_z(et), rotation_z(-et)), std::sin(2 * et), 1e-12);
  }
  // Phases +-2 lie on an arc of length 2pi - 4 the short way round.
  EXPECT_NEAR(half_diamond_unitary(rotation_z(1.0), rotation_z(-1.0)), std::sin(2.0), 1e-12);
  Eigen::MatrixXcd spread = Eigen::MatrixXcd::Zero(4, 4);
  for (int j = 0; j < 4; ++j) spread(j, j) = std::polar(1.0, j * kPi / 2);
  EXPECT_DOUBLE_EQ(half_diamond_unitary(Eigen::MatrixXcd::Identity(4, 4), spread), 1.0);
  const Eigen::MatrixXcd phase = std::polar(1.0, 0.7) * v;
  EXPECT_NEAR(half_diamond_unitary(v, phase), 0.0, 1e-12);
  EXPECT_THROW(half_diamond_unitary(v, 2.0 * v), UsageError);
  EXPECT_THROW(half_diamond_unitary(v, Eigen::MatrixXcd::Identity(4, 4)), UsageError);
}

TEST(HalfDiamond, RandomStatesNeverExceedIt) {
  Rng rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    const SparseHamiltonian h1 = testing::random_hamiltonian(2, 4, rng);
    const SparseHamiltonian h2 = testing::random_hamiltonian(2, 4, rng);
    const Eigen::MatrixXcd v = testing::expm_evolution(testing::kron_hamiltonian(h1), 0.8);
    const Eigen::MatrixXcd w = testing::expm_evolution(testing::kron_hamiltonian(h2), 0.8);
    const double d = half_diamond_unitary(v, w);
    EXPECT_NEAR(d, half_diamond_unitary(w, v), 1e-12);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
    const Eigen::MatrixXcd m = v.adjoint() * w;
    for (int k = 0; k < 500; ++k) {
      Eigen::VectorXcd psi(4);
      for (int j = 0; j < 4; ++j) psi(j) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
      psi.normalize();
      const double overlap = std::norm(psi.dot(m * psi));
      ASSERT_LE(std::sqrt(std::max(0.0, 1.0 - overlap)), d + 1e-9);
    }
  }
}

TEST(DT, KnownValues) {
  const SparseHamiltonian h1(1, {{"Z", 0.5}});
  const SparseHamiltonian h2(1, {{"Z", -0.5}});
  const DistanceResult r = d_T(h1, h2, kPi / 2);
  EXPECT_NEAR(r.value, 1.0, 1e-9);
  EXPECT_EQ(r.kind, DistanceKind::kTimeConstrained);
  EXPECT_DOUBLE_EQ(r.grid_error, 1.0 * (kPi / 2) / 2048);
  EXPECT_NEAR(d_T(h1, h2, 0.5).value, std::sin(0.5), 1e-9);
  EXPECT_EQ(d_T(h1, h1, 3.0).value, 0.0);
  EXPECT_THROW(d_T(h1, h2, 0.0), UsageError);
  EXPECT_THROW(d_T(h1, SparseHamiltonian(2), 1.0), UsageError);
}

TEST(DT, SandwichAndMonotone) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(3));
    const SparseHamiltonian h1 = testing::random_scaled(n, 4, rng.uniform(0.1, 1.0), rng);
    const SparseHamiltonian h2 = testing::random_scaled(n, 4, rng.uniform(0.1, 1.0), rng);
    const double diff = operator_norm(h1 - h2);
    double previous = 0.0;
    for (double T : {0.1, 1.0, 10.0}) {
      const DistanceResult r = d_T(h1, h2, T, 512);
      EXPECT_LE(r.value, std::sin(std::min(kPi / 2, T * diff)) + 1e-9);
      EXPECT_GE(r.value, std::min(T, 1 / (4 * kPi)) * diff / (4 * kPi) - r.grid_error);
      EXPECT_GE(r.value, previous - 1e-12);
      previous = r.value;
    }
  }
}

TEST(DB, TwoLevelClosedForm) {
  const SparseHamiltonian z(1, {{"Z", 1.0}});
  const SparseHamiltonian mz(1, {{"Z", -1.0}});
  for (double b : {0.3, 1.0, 2.5}) {
    EXPECT_NEAR(d_B(z, mz, b).value, std::tanh(b), 1e-12);
    EXPECT_NEAR(gibbs_trace_distance(z, mz, b), 2 * std::tanh(b), 1e-12);
  }
  EXPECT_EQ(gibbs_trace_distance(z, mz, 0.0), 0.0);
}

TEST(DB, DenseAndDiagonalPathsAgree) {
  Rng rng(3);
  const SparseHamiltonian h1 = testing::random_scaled(2, 4, 0.8, rng);
  const SparseHamiltonian h2 = testing::random_scaled(2, 4, 0.8, rng);
  const DistanceResult r = d_B(h1, h2, 2.0, 256);
  EXPECT_LE(r.value, operator_norm(h1 - h2) + r.grid_error);
  EXPECT_GE(d_B(h1, h2, 4.0, 256).value, r.value - 1e-12);

  const SparseHamiltonian d1(2, {{"ZI", 0.4}, {"ZZ", -0.3}});
  const SparseHamiltonian d2(2, {{"IZ", 0.2}});
  const Eigen::MatrixXcd diff = linalg::gibbs_state(linalg::eigh(testing::kron_hamiltonian(d1)), 1.3) -
                                linalg::gibbs_state(linalg::eigh(testing::kron_hamiltonian(d2)), 1.3);
  EXPECT_NEAR(gibbs_trace_distance(d1, d2, 1.3), linalg::hermitian_trace_norm(diff), 1e-12);
}

TEST(GibbsBound, Values) {
  const SparseHamiltonian z(1, {{"Z", 1.0}});
  const SparseHamiltonian mz(1, {{"Z", -1.0}});
  const GibbsBoundCheck c = gibbs_trace_bound_check(z, mz);
  EXPECT_NEAR(c.lhs, 2 * std::tanh(1.0), 1e-12);
  EXPECT_DOUBLE_EQ(c.rhs_new, 2.0);
  EXPECT_NEAR(c.rhs_old, 2 * (std::exp(2.0) - 1), 1e-12);
  const GibbsBoundCheck same = gibbs_trace_bound_check(z, z);
  EXPECT_EQ(same.lhs, 0.0);
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const SparseHamiltonian a = testing::random_hamiltonian(3, 5, rng);
    const SparseHamiltonian b = testing::random_hamiltonian(3, 5, rng);
    const GibbsBoundCheck r = gibbs_trace_bound_check(a, b);
    EXPECT_LE(r.lhs, r.rhs_new + 1e-12);
    EXPECT_LE(r.rhs_new, r.rhs_old);
  }
}

TEST(Counterexample, FamilyAndClosedForm) {
  const CounterexamplePair one = counterexample_family(1);
  EXPECT_EQ(one.h1, SparseHamiltonian(1, {{"Z", 1.0}}));
  EXPECT_EQ(one.h2, SparseHamiltonian(1, {{"Z", -1.0}}));
  EXPECT_NEAR(counterexample_trace_distance(2, 1.0), 0.92423, 1e-5);
  for (int n = 1; n <= 5; ++n) {
    const CounterexamplePair c = counterexample_family(n);
    EXPECT_EQ(c.h1.sparsity(), std::size_t{1} << (n - 1));
    EXPECT_LE((testing::kron_hamiltonian(c.h1) - c.dense1).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_NEAR(operator_norm(c.h1 - c.h2), 2.0, 1e-12);
    for (double beta : {0.1, 1.0, 3.0}) {
      EXPECT_NEAR(gibbs_trace_distance(c.h1, c.h2, beta), counterexample_trace_distance(n, beta), 1e-10);
    }
  }
}

double brute_minmax(double a, double b, int points) {
  double best = 1e300;
  for (int k = 0; k < points; ++k) {
    const double x = 2 * kPi * k / points;
    best = std::min(best, std::max(std::abs(circle_q(a - x)), std::abs(circle_q(b - x))));
  }
  return best;
}

TEST(Circle, ModularFunctions) {
  EXPECT_EQ(circle_q(0.0), 0.0);
  EXPECT_EQ(circle_p(0.0), 0.0);
  EXPECT_NEAR(circle_q(3 * kPi), -kPi, 1e-12);
  EXPECT_NEAR(circle_p(-kPi / 2), 3 * kPi / 2, 1e-12);
  EXPECT_GE(circle_p(-1e-300), 0.0);
  EXPECT_LT(circle_p(-1e-300), 2 * kPi);
}

TEST(Circle, MinmaxMatchesBruteForce) {
  EXPECT_EQ(minmax_closed(1.3, 1.3), 0.0);
  EXPECT_NEAR(minmax_closed(0.0, kPi), kPi / 2, 1e-12);
  Rng rng(5);
  const int points = 20000;
  for (int trial = 0; trial < 50; ++trial) {
    const double a = rng.uniform(-10, 10), b = rng.uniform(-10, 10);
    EXPECT_NEAR(minmax_closed(a, b), brute_minmax(a, b, points), 2 * kPi / points + 1e-12);
  }
}

TEST(EigenphaseBound, Chain) {
  EXPECT_EQ(eigenphase_lower_bound(SparseHamiltonian(2)), 0.0);
  const SparseHamiltonian h(1, {{"Z", kPi / 4}});
  EXPECT_NEAR(eigenphase_lower_bound(h), 0.25, 1e-12);
  const Eigen::MatrixXcd u = testing::expm_evolution(testing::kron_hamiltonian(h), 1.0);
  EXPECT_NEAR(half_diamond_unitary(u, Eigen::MatrixXcd::Identity(2, 2)), std::sin(kPi / 4), 1e-12);
}

}  // namespace
}  // namespace hamlearn
