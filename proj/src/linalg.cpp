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

#include "hamlearn/linalg.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace hamlearn::linalg {

HermitianEigen eigh(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXcd evolution(const HermitianEigen& eig, double t) {
  Eigen::VectorXcd phases(eig.values.size());
  for (Eigen::Index j = 0; j < eig.values.size(); ++j) {
    phases(j) = std::polar(1.0, -t * eig.values(j));
  }
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

Eigen::MatrixXcd gibbs_state(const HermitianEigen& eig, double beta) {
  const Eigen::Index d = eig.values.size();
  // e^{-beta lambda} is largest at the lowest eigenvalue for beta >= 0.
  const double shift = beta >= 0 ? eig.values.minCoeff() : eig.values.maxCoeff();
  Eigen::VectorXd w(d);
  for (Eigen::Index j = 0; j < d; ++j) w(j) = std::exp(-beta * (eig.values(j) - shift));
  w /= w.sum();
  return eig.vectors * w.cast<std::complex<double>>().asDiagonal() * eig.vectors.adjoint();
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const Eigen::MatrixXcd d =
      u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return hermitian_op_norm(0.5 * (d + d.adjoint()));
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  if (d.norm() <= tol) return true;
  return unitarity_defect(u) <= tol;
}

std::vector<double> unitary_eigenphases(const Eigen::MatrixXcd& u) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(u, /*computeEigenvectors=*/false);
  std::vector<double> out;
  out.reserve(u.rows());
  for (Eigen::Index j = 0; j < solver.eigenvalues().size(); ++j) {
    double a = std::arg(solver.eigenvalues()(j));
    if (a < 0) a += 2 * std::numbers::pi;
    if (a >= 2 * std::numbers::pi) a -= 2 * std::numbers::pi;
    out.push_back(a);
  }
  return out;
}

double hermitian_op_norm(const Eigen::MatrixXcd& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double hermitian_trace_norm(const Eigen::MatrixXcd& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().sum();
}

double op_norm(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

}  // namespace hamlearn::linalg
