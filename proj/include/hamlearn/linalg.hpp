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

#include <vector>

#include <Eigen/Dense>

namespace hamlearn::linalg {

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

HermitianEigen eigh(const Eigen::MatrixXcd& h);

/// e^{-i t H} assembled from a precomputed eigendecomposition.
Eigen::MatrixXcd evolution(const HermitianEigen& eig, double t);

/// Gibbs state e^{-beta H} / Tr e^{-beta H}; shifts by the extreme
/// eigenvalue before exponentiating so large beta cannot overflow.
Eigen::MatrixXcd gibbs_state(const HermitianEigen& eig, double beta);

/// ||U^dagger U - Id||_op
double unitarity_defect(const Eigen::MatrixXcd& u);
bool is_unitary(const Eigen::MatrixXcd& u, double tol = 1e-10);

/// Arguments in [0, 2pi) of the eigenvalues of a unitary matrix.
std::vector<double> unitary_eigenphases(const Eigen::MatrixXcd& u);

/// Largest absolute eigenvalue of a Hermitian matrix.
double hermitian_op_norm(const Eigen::MatrixXcd& h);
/// Sum of absolute eigenvalues of a Hermitian matrix.
double hermitian_trace_norm(const Eigen::MatrixXcd& h);
/// Largest singular value of a general matrix.
double op_norm(const Eigen::MatrixXcd& m);

}  // namespace hamlearn::linalg
