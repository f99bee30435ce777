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
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/oracle.hpp"
#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"

namespace hamlearn {

struct LearnerParams {
  std::size_t s_bound = 1;
  double eps = 0.05;
  double delta = 0.1;
  double taylor_C = 1.0;
  /// T = ceil(c0 * s * ln(s / delta)) support rounds.
  double support_rounds_c0 = 64.0;
  /// Multiplier on the Hoeffding shot count of each magnitude estimate.
  double shots_c1 = 1.0;

  void validate() const;
};

struct LearnResult {
  SparseHamiltonian hamiltonian;
  ResourceLedger ledger;
  /// Diagnostics computed against the simulator's ground truth; never read
  /// by the learner itself.
  std::vector<std::pair<std::string, bool>> success_flags;
  std::size_t candidates = 0;

  bool flag(const std::string& name) const;
};

/// ceil(c0 * s * ln(s / delta)).
std::uint64_t support_rounds(std::size_t s_bound, double delta, double c0);

/// ceil(c1 * (6400 C)^2 * ln(4 / delta) / 2 * (1 + 4 b (6400 C)^2)), where b
/// is the known outcome floor lambda / 4^n of the SPAM model (0 without SPAM).
std::uint64_t shots_per_estimate(double delta, double taylor_C, double c1, double spam_floor = 0.0);

/// 1 / (800 C eps).
double small_coeff_time(double eps, double taylor_C);

/// ceil(log10(1 / eps)), at least 1.
int coeff_stage_count(double eps);

/// Sampling time range [pi/4, 1/eps]; collapses to pi/4 when 1/eps < pi/4.
std::pair<double, double> support_time_range(double eps);

/**
 * @brief Oracle view that evolves H_{Q1..Qr} + d * p0 and reports the
 * estimated magnitude of the p0 coefficient of the resulting unitary.
 */
class RestrictedHandle {
 public:
  RestrictedHandle(EvolutionOracle& oracle, std::vector<PauliString> qs, PauliString p0);

  double magnitude(double drift, double t, std::uint64_t shots);

  const PauliString& target() const { return p0_; }
  const std::vector<PauliString>& qs() const { return qs_; }
  EvolutionOracle& oracle() { return oracle_; }
  const EvolutionOracle& oracle() const { return oracle_; }

 private:
  EvolutionOracle& oracle_;
  std::vector<PauliString> qs_;
  PauliString p0_;
};

/// Support candidates; the ledger lives in the oracle.
std::set<PauliString> learn_support(const LearnerParams& params, EvolutionOracle& oracle, Rng& rng);

/// Two-stage estimate of a coefficient known to satisfy |h| <= 10 eps.
/// `drift` is the known pulse already applied along the target.
double learn_small_coeff(RestrictedHandle& handle, double drift, double eps, double delta, double taylor_C,
                         double shots_c1);

struct CoeffTrace {
  std::vector<double> stage_estimates;
  /// Residual h - sum of estimates after each stage (simulation truth).
  std::vector<double> residuals;
  bool contract_held = true;
};

/// Staged refinement for |h| <= 1 with eps_l = 10^{-l}, delta_l = delta / L.
/// When `trace` is given the true restricted coefficient is read from the
/// simulator to record residuals.
double learn_coeff(RestrictedHandle& handle, double eps, double delta, double taylor_C, double shots_c1,
                   CoeffTrace* trace = nullptr);

struct SingleCoeffResult {
  double value = 0.0;
  std::vector<PauliString> qs;
  bool isolated = false;  ///< diagnostic: restricted H was a multiple of p0
  CoeffTrace trace;
};

/// Targeted isolation with delta, then learn_coeff with delta / 2.
SingleCoeffResult learn_single_coeff_sparse(const PauliString& p0, const LearnerParams& params,
                                            EvolutionOracle& oracle, Rng& rng);

/// Support learning with delta / 2, per-candidate estimation at eps / 2 and
/// delta / (2|P|), rounding at eps / 2, truncation to s_bound terms.
LearnResult learn_hamiltonian(const LearnerParams& params, EvolutionOracle& oracle, Rng& rng);

/// learn_hamiltonian at eps / s_bound.
LearnResult learn_hamiltonian_opnorm(const LearnerParams& params, EvolutionOracle& oracle, Rng& rng);

}  // namespace hamlearn
