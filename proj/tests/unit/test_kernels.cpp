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

#include "hamlearn/kernels.hpp"

#include <gtest/gtest.h>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/oracle.hpp"
#include "reference.hpp"

namespace hamlearn {
namespace {

Eigen::MatrixXcd random_matrix(int n, Rng& rng) {
  const Eigen::Index d = Eigen::Index{1} << n;
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) m(i, j) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  }
  return m;
}

TEST(PauliTransform, SerialMatchesTraceDefinition) {
  Rng rng(1);
  for (int n = 1; n <= 3; ++n) {
    const Eigen::MatrixXcd u = random_matrix(n, rng);
    Eigen::MatrixXcd c = u;
    kernels::serial::pauli_transform(c);
    for (const auto& p : all_pauli_strings(n)) {
      const std::complex<double> expected =
          (testing::kron_pauli(p.to_letters()) * u).trace() / static_cast<double>(u.rows());
      const auto [row, col] = kernels::coefficient_slot(p.basis_x_mask(), p.basis_z_mask());
      ASSERT_LE(std::abs(c(row, col) - expected), 1e-13) << p.to_letters();
      ASSERT_LE(std::abs(pauli_coefficient(u, p) - expected), 1e-13) << p.to_letters();
    }
  }
}

TEST(PauliTransform, OmpMatchesSerial) {
  Rng rng(2);
  for (int n : {1, 3, 6, 7}) {
    const Eigen::MatrixXcd u = random_matrix(n, rng);
    Eigen::MatrixXcd a = u, b = u;
    kernels::serial::pauli_transform(a);
    kernels::omp::pauli_transform(b);
    ASSERT_EQ(a, b);
  }
}

TEST(AccumulateTerms, OmpMatchesSerial) {
  Rng rng(3);
  for (int n : {2, 6, 8}) {
    const SparseHamiltonian h = random_instance(n, n == 2 ? 10 : 20, InstanceSpec{}, rng);
    const auto terms = kernels::flatten_terms(h);
    const Eigen::Index d = Eigen::Index{1} << n;
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(d, d), b = a;
    kernels::serial::accumulate_terms(terms, a);
    kernels::omp::accumulate_terms(terms, b);
    ASSERT_EQ(a, b);
    if (n <= 6) ASSERT_LE((a - testing::kron_hamiltonian(h)).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(MapTrials, DeterministicAcrossLoops) {
  const Rng master(77);
  auto body = [](std::size_t i, Rng& rng) { return rng.next_u64() ^ i; };
  const auto par = kernels::map_trials<std::uint64_t>(1000, master, body);
  const auto ser = kernels::map_trials_serial<std::uint64_t>(1000, master, body);
  EXPECT_EQ(par, ser);
}

TEST(ForEachIndex, RethrowsFirstError) {
  EXPECT_THROW(kernels::omp::for_each_index(100,
                                            [](std::size_t i) {
                                              if (i == 17) throw std::runtime_error("boom");
                                            }),
               std::runtime_error);
}

}  // namespace
}  // namespace hamlearn
