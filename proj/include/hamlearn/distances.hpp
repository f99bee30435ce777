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

#include <cstddef>

#include <Eigen/Dense>

#include "hamlearn/hamiltonian.hpp"

namespace hamlearn {

enum class DistanceKind { kTimeConstrained, kTemperatureConstrained };

const char* to_string(DistanceKind kind);

/// Supremum of a physical distance over [0, budget], the point attaining
/// it, and the certified gap between the reported and the true supremum.
struct DistanceResult {
  double value = 0.0;
  double argmax = 0.0;
  double grid_error = 0.0;
  DistanceKind kind = DistanceKind::kTimeConstrained;
};

constexpr std::size_t kDefaultDistanceGrid = 2048;

/// Half the diamond distance between the unitary channels of v and w.
/// Throws UsageError on mismatched sizes or non-unitary input.
double half_diamond_unitary(const Eigen::MatrixXcd& v, const Eigen::MatrixXcd& w);

/// sup over t in [0, T] of half_diamond_unitary(e^{-itH1}, e^{-itH2}).
DistanceResult d_T(const SparseHamiltonian& h1, const SparseHamiltonian& h2, double T,
                   std::size_t grid = kDefaultDistanceGrid, int dense_limit = kDefaultDenseLimit);

/// sup over beta in [0, B] of half the trace distance between Gibbs states.
/// Diagonal pairs skip the eigensolver.
DistanceResult d_B(const SparseHamiltonian& h1, const SparseHamiltonian& h2, double B,
                   std::size_t grid = kDefaultDistanceGrid, int dense_limit = kDefaultDenseLimit);

/// ||rho_1(beta) - rho_2(beta)||_tr (full trace norm, not halved).
double gibbs_trace_distance(const SparseHamiltonian& h1, const SparseHamiltonian& h2, double beta,
                            int dense_limit = kDefaultDenseLimit);

struct GibbsBoundCheck {
  double lhs = 0.0;      ///< ||e^{H1}/Z1 - e^{H2}/Z2||_tr
  double rhs_new = 0.0;  ///< ||H1 - H2||_op
  double rhs_old = 0.0;  ///< 2(e^{||H1 - H2||_op} - 1)
};

GibbsBoundCheck gibbs_trace_bound_check(const SparseHamiltonian& h1, const SparseHamiltonian& h2,
                                        int dense_limit = kDefaultDenseLimit);

/// H1 = |0^n><0^n| - |1^n><1^n| and H2 = -H1, densely and as Z-type Pauli sums.
struct CounterexamplePair {
  SparseHamiltonian h1;
  SparseHamiltonian h2;
  Eigen::MatrixXcd dense1;
  Eigen::MatrixXcd dense2;
};

CounterexamplePair counterexample_family(int n, int dense_limit = kDefaultDenseLimit);

/// 2(e^b - e^{-b}) / (2^n - 2 + e^b + e^{-b}).
double counterexample_trace_distance(int n, double beta);

/// x mod 2pi in [0, 2pi).
double circle_p(double x);
/// (x + pi) mod 2pi - pi in [-pi, pi).
double circle_q(double x);

/// (1/2) min(|q(a) - q(b)|, |p(a) - p(b)|).
double minmax_closed(double a, double b);

/// (1/2pi) max_{j,k} min(|p(l_j) - p(l_k)|, |q(l_j) - q(l_k)|) over the
/// eigenvalues l of h.
double eigenphase_lower_bound(const SparseHamiltonian& h, int dense_limit = kDefaultDenseLimit);

}  // namespace hamlearn
