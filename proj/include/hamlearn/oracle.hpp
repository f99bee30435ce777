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
#include <limits>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/linalg.hpp"
#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"

namespace hamlearn {

/**
 * @brief Cost counters of an experiment sequence.
 *
 * total_evolution_time sums the durations of all queries to the true
 * Hamiltonian; min_time_resolution is the shortest single query duration
 * (infinity until a nonzero-time query is charged). Counters only grow.
 */
struct ResourceLedger {
  std::uint64_t experiments = 0;
  double total_evolution_time = 0.0;
  std::uint64_t queries = 0;
  double min_time_resolution = std::numeric_limits<double>::infinity();
  std::uint64_t ancilla_qubits = 0;

  bool has_resolution() const { return min_time_resolution != std::numeric_limits<double>::infinity(); }

  /// Sums counters; resolution takes the min and ancillas the max.
  ResourceLedger& merge(const ResourceLedger& other);

  friend bool operator==(const ResourceLedger&, const ResourceLedger&) = default;
};

enum class OracleMode { kExact, kTrotter };

struct OracleConfig {
  OracleMode mode = OracleMode::kExact;
  /// Global depolarizing weight mixed into every Pauli-sampling outcome.
  double spam_lambda = 0.0;
  /// Diamond-norm budget of a product-formula implementation.
  double trotter_epsilon = 0.01;
  /// Constant in l = ceil(kappa * sqrt((R c t)^3 / eps)).
  double trotter_kappa = 1.0;
  /// Largest query count a single charge may add.
  std::uint64_t query_budget = std::numeric_limits<std::uint64_t>::max();
  int dense_limit = kDefaultDenseLimit;
  /// Seeds the measurement randomness owned by an EvolutionOracle.
  std::uint64_t seed = 0;

  /// Throws UsageError on out-of-range fields.
  void validate() const;
};

/// Known pulse c * P added to the simulated Hamiltonian.
struct Drift {
  PauliString pauli;
  double coeff = 0.0;
};

/**
 * @brief Step count of the symmetric second-order product formula
 * (e^{-itH_R/2l} ... e^{-itH_1/2l} e^{-itH_1/2l} ... e^{-itH_R/2l})^l.
 */
struct TrotterPlan {
  std::uint64_t terms = 1;   ///< R
  double max_norm = 0.0;     ///< c, largest term operator norm
  double time = 0.0;         ///< t
  double epsilon = 0.0;
  double kappa = 1.0;
  std::uint64_t steps = 1;   ///< l >= 1

  static TrotterPlan make(std::uint64_t terms, double max_norm, double time, double epsilon, double kappa);

  /// 2 R l exponentials per execution.
  long double exponentials() const { return 2.0L * terms * steps; }
  double step_time() const { return time / (2.0 * static_cast<double>(steps)); }
};

/// Query accounting for e^{-itH_{Q1..Qr}} (optionally with a drift pulse)
/// built from 2^r conjugated copies of e^{-itH/(2^{r+1} l)}.
struct RestrictedCost {
  TrotterPlan plan;
  std::uint64_t queries = 0;
  double query_time = 0.0;
};

RestrictedCost restricted_cost(int r, double h_op_norm, double t, const std::optional<Drift>& drift,
                               const OracleConfig& config);

/// e^{-iHt}; charges one query of duration t.
Eigen::MatrixXcd evolve(const SparseHamiltonian& h, double t, ResourceLedger& ledger,
                        int dense_limit = kDefaultDenseLimit);

/// e^{-it(H_{Q1..Qr} + drift)}. Exact mode exponentiates the restricted
/// Hamiltonian and charges the analytic product-formula cost; trotter mode
/// executes the product formula over the 2^r conjugated copies of H.
Eigen::MatrixXcd evolve_restricted(const SparseHamiltonian& h, std::span<const PauliString> qs, double t,
                                   const std::optional<Drift>& drift, const OracleConfig& config,
                                   ResourceLedger& ledger);

/// The product formula itself, without ledger charges.
Eigen::MatrixXcd trotter_restricted_unitary(const SparseHamiltonian& h, std::span<const PauliString> qs,
                                            double t, const std::optional<Drift>& drift,
                                            const TrotterPlan& plan, int dense_limit = kDefaultDenseLimit);

/// Exact e^{-it(H_{Q1..Qr} + drift)} without ledger charges.
Eigen::MatrixXcd exact_restricted_unitary(const SparseHamiltonian& h, std::span<const PauliString> qs,
                                          double t, const std::optional<Drift>& drift,
                                          int dense_limit = kDefaultDenseLimit);

struct KappaCalibration {
  double kappa = 1.0;
  TrotterPlan plan;
  double diamond_error = 0.0;  ///< ||U.U^dag - V.V^dag||_diamond at the final kappa
  int doublings = 0;
};

/// Doubles kappa from config.trotter_kappa until the executed product
/// formula is within `epsilon` of the exact restricted channel in diamond
/// norm.
KappaCalibration calibrate_trotter_kappa(const SparseHamiltonian& h, std::span<const PauliString> qs, double t,
                                         const std::optional<Drift>& drift, double epsilon,
                                         const OracleConfig& config);

/// Coefficients u_P = Tr[P U]/2^n laid out by kernels::coefficient_slot.
Eigen::MatrixXcd pauli_coefficients(const Eigen::MatrixXcd& u);

/// Single coefficient Tr[P U]/2^n in O(2^n).
std::complex<double> pauli_coefficient(const Eigen::MatrixXcd& u, const PauliString& p);

/// Bell-basis sample of the Choi state of u: P with probability
/// (1 - lambda)|u_P|^2 + lambda 4^{-n}. Charges one experiment and n ancillas.
PauliString pauli_sample(const Eigen::MatrixXcd& u, const OracleConfig& config, ResourceLedger& ledger, Rng& rng);

/// Unbiased-frequency estimate of |u_{p0}| from `shots` Pauli samples of the
/// restricted evolution, with the depolarizing bias removed.
double estimate_pauli_coeff_magnitude(const SparseHamiltonian& h, std::span<const PauliString> qs,
                                      const std::optional<Drift>& drift, const PauliString& p0, double t,
                                      std::uint64_t shots, const OracleConfig& config, ResourceLedger& ledger,
                                      Rng& rng);

/// Maps an observed outcome frequency back to |u_P| under SPAM weight lambda.
double debias_magnitude(double frequency, double spam_lambda, int num_qubits);

/**
 * @brief Simulated access to an unknown Hamiltonian.
 *
 * Holds the true Hamiltonian, the measurement randomness and the ledger.
 * Learners only see the query interface; ground_truth() exists for
 * diagnostics and tests. Single-owner: one learner run per instance.
 */
class EvolutionOracle {
 public:
  EvolutionOracle(SparseHamiltonian h, OracleConfig config);

  int num_qubits() const { return h_.num_qubits(); }
  const OracleConfig& config() const { return config_; }
  const ResourceLedger& ledger() const { return ledger_; }
  ResourceLedger& ledger() { return ledger_; }
  const SparseHamiltonian& ground_truth() const { return h_; }
  double hamiltonian_op_norm() const { return h_op_norm_; }

  /// One experiment: evolve under H_{Q1..Qr} (+ drift) for time t, then
  /// Pauli-sample the result.
  PauliString sample_restricted(std::span<const PauliString> qs, double t, const std::optional<Drift>& drift);

  /// `shots` experiments of sample_restricted, returning the debiased
  /// estimate of |u_{p0}|.
  double estimate_magnitude(std::span<const PauliString> qs, const std::optional<Drift>& drift,
                            const PauliString& p0, double t, std::uint64_t shots);

  /// Outcome distribution before SPAM mixing: sparse map P -> |u_P|^2.
  /// Uses the commuting-product expansion when possible, else dense.
  std::unordered_map<PauliString, double> outcome_distribution(std::span<const PauliString> qs, double t,
                                                               const std::optional<Drift>& drift) const;

 private:
  void charge_restricted(std::size_t r, double t, const std::optional<Drift>& drift, std::uint64_t repetitions);

  SparseHamiltonian h_;
  OracleConfig config_;
  ResourceLedger ledger_;
  Rng rng_;
  double h_op_norm_ = 0.0;
};

}  // namespace hamlearn
