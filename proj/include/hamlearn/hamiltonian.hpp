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
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"

namespace hamlearn {

/// Coefficients whose magnitude falls below this are dropped from storage.
inline constexpr double kZeroCoefficient = 1e-15;

/**
 * @brief Traceless Hamiltonian H = sum_P h_P P with real coefficients.
 *
 * Stores only nonzero, non-identity terms keyed by Pauli string, so the
 * sparsity s is the number of stored terms.
 */
class SparseHamiltonian {
 public:
  using TermMap = std::map<PauliString, double>;

  SparseHamiltonian() = default;
  explicit SparseHamiltonian(int num_qubits) : n_(num_qubits) {}
  /// Convenience constructor from letter strings, e.g. {{"XX", 0.5}, {"ZI", 0.3}}.
  SparseHamiltonian(int num_qubits, std::initializer_list<std::pair<std::string_view, double>> terms);

  int num_qubits() const { return n_; }
  std::size_t sparsity() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  /// h_P, zero for strings outside the support.
  double coeff(const PauliString& p) const;
  bool contains(const PauliString& p) const { return terms_.count(p) != 0; }

  /// Adds c to h_P. Identity strings are rejected (traceless convention);
  /// results smaller than kZeroCoefficient are erased.
  void add_term(const PauliString& p, double c);
  /// Overwrites h_P with the same canonicalization as add_term.
  void set_term(const PauliString& p, double c);
  void erase(const PauliString& p) { terms_.erase(p); }

  std::set<PauliString> support() const;
  /// True when every |h_P| <= 1.
  bool is_normalized() const;

  SparseHamiltonian& operator+=(const SparseHamiltonian& other);
  SparseHamiltonian& operator-=(const SparseHamiltonian& other);
  SparseHamiltonian& operator*=(double scale);
  friend SparseHamiltonian operator+(SparseHamiltonian a, const SparseHamiltonian& b) { return a += b; }
  friend SparseHamiltonian operator-(SparseHamiltonian a, const SparseHamiltonian& b) { return a -= b; }
  friend SparseHamiltonian operator*(double s, SparseHamiltonian a) { return a *= s; }
  friend bool operator==(const SparseHamiltonian&, const SparseHamiltonian&) = default;

 private:
  void check(const PauliString& p) const;

  int n_ = 0;
  TermMap terms_;
};

struct CoefficientNorms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
};

struct Norms {
  double l1 = 0.0;
  double l2 = 0.0;
  double linf = 0.0;
  double op = 0.0;
};

struct SpectralData {
  Eigen::VectorXd eigenvalues;  ///< ascending
  double spread = 0.0;          ///< lambda_max - lambda_min
};

/// Random instance shape for random_instance.
struct InstanceSpec {
  double coeff_range = 1.0;
  double coeff_floor = 0.1;
};

/// Terms with |h_P| >= eps.
std::set<PauliString> effective_support(const SparseHamiltonian& h, double eps);

/// Keeps exactly the terms commuting with every string in `qs`.
SparseHamiltonian restrict(const SparseHamiltonian& h, std::span<const PauliString> qs);

/// True when every term is a Z-type string, i.e. the dense matrix is diagonal.
bool is_diagonal(const SparseHamiltonian& h);

Eigen::MatrixXcd dense_matrix(const SparseHamiltonian& h, int dense_limit = kDefaultDenseLimit);

/// Pauli-coefficient norms only; needs no dense work.
CoefficientNorms coefficient_norms(const SparseHamiltonian& h);
double operator_norm(const SparseHamiltonian& h, int dense_limit = kDefaultDenseLimit);
Norms norms(const SparseHamiltonian& h, int dense_limit = kDefaultDenseLimit);

SpectralData spectral_data(const SparseHamiltonian& h, int dense_limit = kDefaultDenseLimit);

/// s distinct non-identity strings drawn uniformly without replacement, each
/// with a uniformly random sign and magnitude uniform in [floor, range].
SparseHamiltonian random_instance(int num_qubits, std::size_t s, const InstanceSpec& spec, Rng& rng);

}  // namespace hamlearn
