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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "hamlearn/errors.hpp"
#include "hamlearn/isolation.hpp"

namespace hamlearn {

namespace {

constexpr double kHoeffdingMargin = 6400.0;

std::uint64_t checked_ceil(long double value, const char* what) {
  if (!(value < 1.8e19L)) throw BudgetError(std::string(what) + " overflows");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(value)));
}

}  // namespace

void LearnerParams::validate() const {
  if (s_bound < 1) throw UsageError("s_bound must be at least 1");
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
  if (!(taylor_C >= 1.0)) throw UsageError("taylor_C must be at least 1");
  if (!(support_rounds_c0 >= 1.0)) throw UsageError("support_rounds_c0 must be at least 1");
  if (!(shots_c1 >= 1.0)) throw UsageError("shots_c1 must be at least 1");
}

bool LearnResult::flag(const std::string& name) const {
  for (const auto& [k, v] : success_flags) {
    if (k == name) return v;
  }
  return false;
}

std::uint64_t support_rounds(std::size_t s_bound, double delta, double c0) {
  const long double s = static_cast<long double>(s_bound);
  return checked_ceil(c0 * s * std::log(s / delta), "support round count");
}

std::uint64_t shots_per_estimate(double delta, double taylor_C, double c1, double spam_floor) {
  const long double inv_margin = kHoeffdingMargin * taylor_C;
  const long double base = c1 * inv_margin * inv_margin * std::log(4.0L / delta) / 2.0L;
  // The floor adds frequency noise sqrt(b/N) that the square root turns
  // into amplitude noise (b/N)^{1/4}; this factor keeps it below the margin.
  const long double floor_factor = 1.0L + 4.0L * spam_floor * inv_margin * inv_margin;
  return checked_ceil(base * floor_factor, "shot count");
}

double small_coeff_time(double eps, double taylor_C) { return 1.0 / (800.0 * taylor_C * eps); }

int coeff_stage_count(double eps) {
  const double raw = std::log10(1.0 / eps);
  const double nearest = std::round(raw);
  const double value = std::abs(raw - nearest) < 1e-9 ? nearest : std::ceil(raw);
  return std::max(1, static_cast<int>(value));
}

std::pair<double, double> support_time_range(double eps) {
  const double lo = std::numbers::pi / 4.0;
  return {lo, std::max(lo, 1.0 / eps)};
}

RestrictedHandle::RestrictedHandle(EvolutionOracle& oracle, std::vector<PauliString> qs, PauliString p0)
    : oracle_(oracle), qs_(std::move(qs)), p0_(std::move(p0)) {
  if (p0_.num_qubits() != oracle_.num_qubits()) throw UsageError("target string has wrong qubit count");
  if (p0_.is_identity()) throw UsageError("cannot learn the identity coefficient");
}

double RestrictedHandle::magnitude(double drift, double t, std::uint64_t shots) {
  std::optional<Drift> pulse;
  if (drift != 0.0) pulse = Drift{p0_, drift};
  return oracle_.estimate_magnitude(qs_, pulse, p0_, t, shots);
}

std::set<PauliString> learn_support(const LearnerParams& params, EvolutionOracle& oracle, Rng& rng) {
  params.validate();
  const std::uint64_t rounds = support_rounds(params.s_bound, params.delta, params.support_rounds_c0);
  const std::size_t r = isolation_rounds(params.s_bound);
  const auto [t_lo, t_hi] = support_time_range(params.eps);
  const int n = oracle.num_qubits();
  std::set<PauliString> found;
  std::vector<PauliString> qs(r);
  for (std::uint64_t round = 0; round < rounds; ++round) {
    for (auto& q : qs) q = random_uniform(n, rng);
    const double t = t_lo == t_hi ? t_lo : rng.uniform(t_lo, t_hi);
    const PauliString outcome = oracle.sample_restricted(qs, t, std::nullopt);
    if (!outcome.is_identity()) found.insert(outcome);
  }
  return found;
}

double learn_small_coeff(RestrictedHandle& handle, double drift, double eps, double delta, double taylor_C,
                         double shots_c1) {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
  const double t = small_coeff_time(eps, taylor_C);
  const EvolutionOracle& oracle = handle.oracle();
  const double floor = oracle.config().spam_lambda * std::ldexp(1.0, -2 * oracle.num_qubits());
  const std::uint64_t shots = shots_per_estimate(delta, taylor_C, shots_c1, floor);
  // Under the |h| <= 10 eps promise the clamp only moves the estimate
  // toward the truth; it also keeps the drift pulse bounded.
  const double magnitude = std::min(handle.magnitude(drift, t, shots) / t, 10.0 * eps);
  const double shifted = handle.magnitude(drift + magnitude, t, shots) / t;
  return shifted >= eps / 2.0 ? magnitude : -magnitude;
}

double learn_coeff(RestrictedHandle& handle, double eps, double delta, double taylor_C, double shots_c1,
                   CoeffTrace* trace) {
  if (!(eps > 0.0)) throw UsageError("eps must be positive");
  const int stages = coeff_stage_count(eps);
  const double stage_delta = delta / stages;
  double truth = 0.0;
  if (trace) {
    truth = restrict(handle.oracle().ground_truth(), handle.qs()).coeff(handle.target());
    *trace = CoeffTrace{};
  }
  double estimate = 0.0;
  double stage_eps = 1.0;
  for (int l = 1; l <= stages; ++l) {
    stage_eps /= 10.0;
    const double h_l = learn_small_coeff(handle, -estimate, stage_eps, stage_delta, taylor_C, shots_c1);
    estimate += h_l;
    if (trace) {
      const double residual = truth - estimate;
      trace->stage_estimates.push_back(h_l);
      trace->residuals.push_back(residual);
      if (std::abs(residual) > stage_eps) trace->contract_held = false;
    }
  }
  return estimate;
}

SingleCoeffResult learn_single_coeff_sparse(const PauliString& p0, const LearnerParams& params,
                                            EvolutionOracle& oracle, Rng& rng) {
  params.validate();
  const SparseHamiltonian& truth = oracle.ground_truth();
  IsolationDraw draw = draw_isolation_for_target(truth, p0, params.s_bound, params.delta, rng);
  SingleCoeffResult out;
  out.isolated = draw.survivors.empty() || (draw.survivors.size() == 1 && draw.survivors.count(p0) == 1);
  out.qs = draw.qs;
  RestrictedHandle handle(oracle, std::move(draw.qs), p0);
  out.value = learn_coeff(handle, params.eps, params.delta / 2.0, params.taylor_C, params.shots_c1, &out.trace);
  return out;
}

LearnResult learn_hamiltonian(const LearnerParams& params, EvolutionOracle& oracle, Rng& rng) {
  params.validate();
  LearnerParams support_params = params;
  support_params.delta = params.delta / 2.0;
  const std::set<PauliString> candidates = learn_support(support_params, oracle, rng);

  LearnResult result;
  result.candidates = candidates.size();
  const int n = oracle.num_qubits();
  SparseHamiltonian estimate(n);
  bool isolated = true;
  bool contracts = true;
  if (!candidates.empty()) {
    LearnerParams coeff_params = params;
    coeff_params.eps = params.eps / 2.0;
    coeff_params.delta = params.delta / (2.0 * static_cast<double>(candidates.size()));
    std::vector<std::pair<double, PauliString>> kept;
    for (const PauliString& p : candidates) {
      const SingleCoeffResult r = learn_single_coeff_sparse(p, coeff_params, oracle, rng);
      isolated = isolated && r.isolated;
      contracts = contracts && r.trace.contract_held;
      if (std::abs(r.value) > params.eps / 2.0) kept.emplace_back(r.value, p);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return std::abs(a.first) > std::abs(b.first); });
    if (kept.size() > params.s_bound) kept.resize(params.s_bound);
    for (const auto& [value, p] : kept) estimate.set_term(p, value);
  }

  const SparseHamiltonian& truth = oracle.ground_truth();
  bool covered = true;
  for (const PauliString& p : effective_support(truth, params.eps)) covered = covered && candidates.count(p) == 1;
  result.hamiltonian = std::move(estimate);
  result.ledger = oracle.ledger();
  result.success_flags = {{"support_covered", covered},
                          {"isolations_clean", isolated},
                          {"stage_contracts_held", contracts}};
  return result;
}

LearnResult learn_hamiltonian_opnorm(const LearnerParams& params, EvolutionOracle& oracle, Rng& rng) {
  params.validate();
  LearnerParams scaled = params;
  scaled.eps = params.eps / static_cast<double>(params.s_bound);
  return learn_hamiltonian(scaled, oracle, rng);
}

}  // namespace hamlearn
