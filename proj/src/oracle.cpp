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

#include "hamlearn/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>

#include "hamlearn/distances.hpp"
#include "hamlearn/errors.hpp"
#include "hamlearn/kernels.hpp"

namespace hamlearn {

namespace {

// Drift pulses stay within twice the unit coefficient scale: the
// coefficient-learning stages add a fresh magnitude estimate on top of an
// accumulated correction that itself is bounded by one.
constexpr double kMaxDrift = 2.0;

void check_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw UsageError("evolution time must be finite and nonnegative");
}

void check_drift(const std::optional<Drift>& drift, int n) {
  if (!drift) return;
  if (drift->pauli.num_qubits() != n) throw UsageError("drift string has wrong qubit count");
  if (drift->pauli.is_identity()) throw UsageError("drift along the identity is a global phase");
  if (std::abs(drift->coeff) > kMaxDrift) throw UsageError("drift coefficient exceeds the allowed range");
}

void add_queries(ResourceLedger& ledger, long double queries, const OracleConfig& config) {
  if (queries > static_cast<long double>(config.query_budget)) {
    throw BudgetError("query charge " + std::to_string(static_cast<double>(queries)) +
                      " exceeds the configured budget");
  }
  const long double room = static_cast<long double>(std::numeric_limits<std::uint64_t>::max() - ledger.queries);
  if (queries > room) throw BudgetError("ledger query counter overflow");
  ledger.queries += static_cast<std::uint64_t>(queries);
}

void note_resolution(ResourceLedger& ledger, double query_time) {
  if (query_time > 0.0) ledger.min_time_resolution = std::min(ledger.min_time_resolution, query_time);
}

SparseHamiltonian restricted_with_drift(const SparseHamiltonian& h, std::span<const PauliString> qs,
                                        const std::optional<Drift>& drift) {
  SparseHamiltonian hr = restrict(h, qs);
  if (drift) hr.add_term(drift->pauli, drift->coeff);
  return hr;
}

PauliString pauli_from_masks(int n, std::uint64_t x_mask, std::uint64_t z_mask) {
  PauliString p(n);
  for (int k = 0; k < n; ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - k);
    p.set(k, (x_mask & bit) != 0, (z_mask & bit) != 0);
  }
  return p;
}

Eigen::MatrixXcd matrix_power(Eigen::MatrixXcd base, std::uint64_t exponent) {
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(base.rows(), base.cols());
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::uint64_t draw_binomial(std::uint64_t shots, double q, Rng& rng) {
  q = std::clamp(q, 0.0, 1.0);
  std::binomial_distribution<unsigned long long> dist(shots, q);
  return dist(rng.engine());
}

}  // namespace

ResourceLedger& ResourceLedger::merge(const ResourceLedger& other) {
  experiments += other.experiments;
  total_evolution_time += other.total_evolution_time;
  queries += other.queries;
  min_time_resolution = std::min(min_time_resolution, other.min_time_resolution);
  ancilla_qubits = std::max(ancilla_qubits, other.ancilla_qubits);
  return *this;
}

void OracleConfig::validate() const {
  if (!(spam_lambda >= 0.0 && spam_lambda < 1.0)) throw UsageError("spam_lambda must lie in [0, 1)");
  if (!(trotter_epsilon > 0.0)) throw UsageError("trotter_epsilon must be positive");
  if (!(trotter_kappa > 0.0)) throw UsageError("trotter_kappa must be positive");
  if (dense_limit < 1) throw UsageError("dense_limit must be positive");
}

TrotterPlan TrotterPlan::make(std::uint64_t terms, double max_norm, double time, double epsilon, double kappa) {
  if (terms < 1) throw UsageError("product formula needs at least one term");
  if (!(epsilon > 0.0)) throw UsageError("product formula error budget must be positive");
  TrotterPlan plan{terms, max_norm, time, epsilon, kappa, 1};
  const long double rct = static_cast<long double>(terms) * max_norm * time;
  const long double raw = std::ceil(kappa * std::sqrt(rct * rct * rct / epsilon));
  if (raw > 1e18L) throw BudgetError("product formula step count overflows");
  plan.steps = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(raw));
  return plan;
}

RestrictedCost restricted_cost(int r, double h_op_norm, double t, const std::optional<Drift>& drift,
                               const OracleConfig& config) {
  if (r < 0) throw UsageError("negative restriction length");
  if (r >= 62) throw BudgetError("2^r conjugated copies overflow the query counter");
  RestrictedCost cost;
  if (r == 0 && !drift) {
    cost.plan = TrotterPlan{1, h_op_norm, t, config.trotter_epsilon, config.trotter_kappa, 1};
    cost.queries = 1;
    cost.query_time = t;
    return cost;
  }
  const std::uint64_t copies = std::uint64_t{1} << r;
  // A drift pulse is sliced into one piece per conjugated copy, so the
  // formula has 2^r or 2^{r+1} factors of norm at most max(|H|, |d|) / 2^r.
  const double scale = std::max(h_op_norm, drift ? std::abs(drift->coeff) : 0.0);
  cost.plan = TrotterPlan::make(copies * (drift ? 2 : 1), scale / static_cast<double>(copies), t,
                                config.trotter_epsilon, config.trotter_kappa);
  const long double queries = 2.0L * copies * cost.plan.steps;
  if (queries > static_cast<long double>(config.query_budget)) {
    throw BudgetError("restricted evolution needs " + std::to_string(static_cast<double>(queries)) +
                      " queries, above the configured budget");
  }
  cost.queries = static_cast<std::uint64_t>(queries);
  cost.query_time = t / static_cast<double>(queries);
  return cost;
}

Eigen::MatrixXcd evolve(const SparseHamiltonian& h, double t, ResourceLedger& ledger, int dense_limit) {
  check_time(t);
  Eigen::MatrixXcd u = linalg::evolution(linalg::eigh(dense_matrix(h, dense_limit)), t);
  ledger.queries += 1;
  ledger.total_evolution_time += t;
  note_resolution(ledger, t);
  return u;
}

Eigen::MatrixXcd exact_restricted_unitary(const SparseHamiltonian& h, std::span<const PauliString> qs, double t,
                                          const std::optional<Drift>& drift, int dense_limit) {
  check_time(t);
  check_drift(drift, h.num_qubits());
  return linalg::evolution(linalg::eigh(dense_matrix(restricted_with_drift(h, qs, drift), dense_limit)), t);
}

Eigen::MatrixXcd trotter_restricted_unitary(const SparseHamiltonian& h, std::span<const PauliString> qs, double t,
                                            const std::optional<Drift>& drift, const TrotterPlan& plan,
                                            int dense_limit) {
  check_time(t);
  check_drift(drift, h.num_qubits());
  const int n = h.num_qubits();
  const std::size_t r = qs.size();
  if (r >= 20) throw CapacityError("executing 2^r conjugated copies is limited to r < 20");
  const std::uint64_t copies = std::uint64_t{1} << r;
  const double l = static_cast<double>(plan.steps);

  // e^{-i t H_S / 2l} = M_S e^{-i t H / (2^{r+1} l)} M_S^dagger with
  // M_S = Q_{i_w} ... Q_{i_1}.
  const Eigen::MatrixXcd base = linalg::evolution(linalg::eigh(dense_matrix(h, dense_limit)),
                                                  t / (2.0 * l * static_cast<double>(copies)));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd forward = Eigen::MatrixXcd::Identity(dim, dim);   // f_1 f_2 ... f_R
  Eigen::MatrixXcd backward = Eigen::MatrixXcd::Identity(dim, dim);  // f_R ... f_2 f_1
  auto push = [&](const Eigen::MatrixXcd& f) {
    forward = forward * f;
    backward = f * backward;
  };
  Eigen::MatrixXcd slice;
  if (drift) {
    const double angle = t * drift->coeff / (2.0 * l * static_cast<double>(copies));
    slice = std::cos(angle) * Eigen::MatrixXcd::Identity(dim, dim) -
            std::complex<double>(0.0, std::sin(angle)) * dense(drift->pauli, dense_limit);
  }
  for (std::uint64_t subset = 0; subset < copies; ++subset) {
    if (drift) push(slice);
    PauliString m = PauliString::identity(n);
    for (std::size_t i = 0; i < r; ++i) {
      if (subset & (std::uint64_t{1} << i)) m = multiply(qs[i], m).pauli;
    }
    if (m.is_identity()) {
      push(base);
    } else {
      const Eigen::MatrixXcd md = dense(m, dense_limit);
      push(md * base * md);
    }
  }
  return matrix_power(backward * forward, plan.steps);
}

Eigen::MatrixXcd evolve_restricted(const SparseHamiltonian& h, std::span<const PauliString> qs, double t,
                                   const std::optional<Drift>& drift, const OracleConfig& config,
                                   ResourceLedger& ledger) {
  config.validate();
  check_time(t);
  check_drift(drift, h.num_qubits());
  const double h_norm = operator_norm(h, config.dense_limit);
  const RestrictedCost cost = restricted_cost(static_cast<int>(qs.size()), h_norm, t, drift, config);
  Eigen::MatrixXcd u = config.mode == OracleMode::kExact
                           ? exact_restricted_unitary(h, qs, t, drift, config.dense_limit)
                           : trotter_restricted_unitary(h, qs, t, drift, cost.plan, config.dense_limit);
  add_queries(ledger, cost.queries, config);
  ledger.total_evolution_time += t;
  note_resolution(ledger, cost.query_time);
  return u;
}

KappaCalibration calibrate_trotter_kappa(const SparseHamiltonian& h, std::span<const PauliString> qs, double t,
                                         const std::optional<Drift>& drift, double epsilon,
                                         const OracleConfig& config) {
  config.validate();
  const Eigen::MatrixXcd exact = exact_restricted_unitary(h, qs, t, drift, config.dense_limit);
  const double h_norm = operator_norm(h, config.dense_limit);
  OracleConfig trial = config;
  trial.trotter_epsilon = epsilon;
  KappaCalibration out;
  for (out.doublings = 0; out.doublings < 40; ++out.doublings) {
    out.kappa = trial.trotter_kappa;
    out.plan = restricted_cost(static_cast<int>(qs.size()), h_norm, t, drift, trial).plan;
    const Eigen::MatrixXcd v = trotter_restricted_unitary(h, qs, t, drift, out.plan, config.dense_limit);
    out.diamond_error = 2.0 * half_diamond_unitary(exact, v);
    if (out.diamond_error <= epsilon) return out;
    trial.trotter_kappa *= 2.0;
  }
  return out;
}

Eigen::MatrixXcd pauli_coefficients(const Eigen::MatrixXcd& u) {
  Eigen::MatrixXcd c = u;
  kernels::omp::pauli_transform(c);
  return c;
}

std::complex<double> pauli_coefficient(const Eigen::MatrixXcd& u, const PauliString& p) {
  const auto dim = static_cast<std::uint64_t>(u.rows());
  if (dim != (std::uint64_t{1} << p.num_qubits())) throw UsageError("Pauli string does not match matrix size");
  const std::uint64_t xm = p.basis_x_mask();
  const std::uint64_t zm = p.basis_z_mask();
  std::complex<double> acc = 0.0;
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(zm & col) & 1) ? -1.0 : 1.0;
    acc += sign * u(col, col ^ xm);
  }
  return acc * Phase{static_cast<std::uint8_t>(p.y_count() & 3)}.value() / static_cast<double>(dim);
}

PauliString pauli_sample(const Eigen::MatrixXcd& u, const OracleConfig& config, ResourceLedger& ledger, Rng& rng) {
  config.validate();
  const auto dim = static_cast<std::uint64_t>(u.rows());
  if (u.rows() != u.cols() || dim == 0 || !std::has_single_bit(dim)) {
    throw UsageError("Pauli sampling needs a square 2^n matrix");
  }
  const int n = std::countr_zero(dim);
  if (n > config.dense_limit) throw CapacityError("Pauli sampling above the dense limit");
  if (!linalg::is_unitary(u, 1e-10)) throw UsageError("Pauli sampling input is not unitary");

  ledger.experiments += 1;
  ledger.ancilla_qubits = std::max<std::uint64_t>(ledger.ancilla_qubits, static_cast<std::uint64_t>(n));
  if (config.spam_lambda > 0.0 && rng.uniform() < config.spam_lambda) return random_uniform(n, rng);

  const Eigen::MatrixXcd coeffs = pauli_coefficients(u);
  const double target = rng.uniform() * coeffs.squaredNorm();
  double acc = 0.0;
  std::uint64_t last_row = 0, last_col = 0;
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (std::uint64_t row = 0; row < dim; ++row) {
      const double w = std::norm(coeffs(row, col));
      if (w == 0.0) continue;
      acc += w;
      last_row = row;
      last_col = col;
      if (acc > target) return pauli_from_masks(n, row ^ col, col);
    }
  }
  return pauli_from_masks(n, last_row ^ last_col, last_col);
}

double debias_magnitude(double frequency, double spam_lambda, int num_qubits) {
  const double floor_weight = spam_lambda * std::ldexp(1.0, -2 * num_qubits);
  return std::sqrt(std::max(0.0, (frequency - floor_weight) / (1.0 - spam_lambda)));
}

double estimate_pauli_coeff_magnitude(const SparseHamiltonian& h, std::span<const PauliString> qs,
                                      const std::optional<Drift>& drift, const PauliString& p0, double t,
                                      std::uint64_t shots, const OracleConfig& config, ResourceLedger& ledger,
                                      Rng& rng) {
  config.validate();
  if (shots < 1) throw UsageError("magnitude estimate needs at least one shot");
  const double h_norm = operator_norm(h, config.dense_limit);
  const RestrictedCost cost = restricted_cost(static_cast<int>(qs.size()), h_norm, t, drift, config);
  const Eigen::MatrixXcd u = config.mode == OracleMode::kExact
                                 ? exact_restricted_unitary(h, qs, t, drift, config.dense_limit)
                                 : trotter_restricted_unitary(h, qs, t, drift, cost.plan, config.dense_limit);
  add_queries(ledger, static_cast<long double>(cost.queries) * shots, config);
  ledger.total_evolution_time += t * static_cast<double>(shots);
  note_resolution(ledger, cost.query_time);
  ledger.experiments += shots;
  ledger.ancilla_qubits = std::max<std::uint64_t>(ledger.ancilla_qubits, static_cast<std::uint64_t>(h.num_qubits()));

  const int n = h.num_qubits();
  const double q0 = std::norm(pauli_coefficient(u, p0));
  const double q = (1.0 - config.spam_lambda) * q0 + config.spam_lambda * std::ldexp(1.0, -2 * n);
  const std::uint64_t hits = draw_binomial(shots, q, rng);
  return debias_magnitude(static_cast<double>(hits) / static_cast<double>(shots), config.spam_lambda, n);
}

EvolutionOracle::EvolutionOracle(SparseHamiltonian h, OracleConfig config)
    : h_(std::move(h)), config_(config), rng_(config.seed) {
  config_.validate();
  h_op_norm_ = h_.num_qubits() <= config_.dense_limit ? operator_norm(h_, config_.dense_limit)
                                                       : coefficient_norms(h_).l1;
}

void EvolutionOracle::charge_restricted(std::size_t r, double t, const std::optional<Drift>& drift,
                                        std::uint64_t repetitions) {
  const RestrictedCost cost = restricted_cost(static_cast<int>(r), h_op_norm_, t, drift, config_);
  add_queries(ledger_, static_cast<long double>(cost.queries) * repetitions, config_);
  ledger_.total_evolution_time += t * static_cast<double>(repetitions);
  note_resolution(ledger_, cost.query_time);
  ledger_.experiments += repetitions;
  ledger_.ancilla_qubits = std::max<std::uint64_t>(ledger_.ancilla_qubits, static_cast<std::uint64_t>(num_qubits()));
}

std::unordered_map<PauliString, double> EvolutionOracle::outcome_distribution(
    std::span<const PauliString> qs, double t, const std::optional<Drift>& drift) const {
  check_time(t);
  check_drift(drift, num_qubits());
  const SparseHamiltonian hr = restricted_with_drift(h_, qs, drift);
  const int n = num_qubits();
  std::unordered_map<PauliString, double> dist;

  bool commuting = config_.mode == OracleMode::kExact && hr.sparsity() <= 16;
  for (auto a = hr.terms().begin(); commuting && a != hr.terms().end(); ++a) {
    for (auto b = std::next(a); b != hr.terms().end(); ++b) {
      if (!commutes(a->first, b->first)) {
        commuting = false;
        break;
      }
    }
  }

  if (commuting) {
    // e^{-itH} = prod_k (cos(h_k t) I - i sin(h_k t) P_k) for commuting terms.
    std::unordered_map<PauliString, std::complex<double>> expansion{{PauliString::identity(n), 1.0}};
    for (const auto& [p, c] : hr.terms()) {
      const std::complex<double> a = std::cos(c * t);
      const std::complex<double> b(0.0, -std::sin(c * t));
      std::unordered_map<PauliString, std::complex<double>> next;
      for (const auto& [q, v] : expansion) {
        next[q] += a * v;
        const PauliProduct pq = multiply(p, q);
        next[pq.pauli] += b * v * pq.phase.value();
      }
      expansion = std::move(next);
    }
    for (const auto& [q, v] : expansion) {
      const double w = std::norm(v);
      if (w > 0.0) dist.emplace(q, w);
    }
    return dist;
  }

  Eigen::MatrixXcd u;
  if (config_.mode == OracleMode::kExact) {
    u = linalg::evolution(linalg::eigh(dense_matrix(hr, config_.dense_limit)), t);
  } else {
    const auto cost = restricted_cost(static_cast<int>(qs.size()), h_op_norm_, t, drift, config_);
    u = trotter_restricted_unitary(h_, qs, t, drift, cost.plan, config_.dense_limit);
  }
  const Eigen::MatrixXcd coeffs = pauli_coefficients(u);
  const auto dim = static_cast<std::uint64_t>(u.rows());
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (std::uint64_t row = 0; row < dim; ++row) {
      const double w = std::norm(coeffs(row, col));
      if (w > 0.0) dist.emplace(pauli_from_masks(n, row ^ col, col), w);
    }
  }
  return dist;
}

PauliString EvolutionOracle::sample_restricted(std::span<const PauliString> qs, double t,
                                               const std::optional<Drift>& drift) {
  const auto dist = outcome_distribution(qs, t, drift);
  charge_restricted(qs.size(), t, drift, 1);
  if (config_.spam_lambda > 0.0 && rng_.uniform() < config_.spam_lambda) return random_uniform(num_qubits(), rng_);

  // Deterministic walk order: sort outcomes before accumulating.
  std::vector<std::pair<PauliString, double>> items(dist.begin(), dist.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  double total = 0.0;
  for (const auto& it : items) total += it.second;
  const double target = rng_.uniform() * total;
  double acc = 0.0;
  for (const auto& [p, w] : items) {
    acc += w;
    if (acc > target) return p;
  }
  return items.back().first;
}

double EvolutionOracle::estimate_magnitude(std::span<const PauliString> qs, const std::optional<Drift>& drift,
                                           const PauliString& p0, double t, std::uint64_t shots) {
  if (shots < 1) throw UsageError("magnitude estimate needs at least one shot");
  const auto dist = outcome_distribution(qs, t, drift);
  charge_restricted(qs.size(), t, drift, shots);
  const auto it = dist.find(p0);
  const double q0 = it == dist.end() ? 0.0 : it->second;
  const int n = num_qubits();
  const double q = (1.0 - config_.spam_lambda) * q0 + config_.spam_lambda * std::ldexp(1.0, -2 * n);
  const std::uint64_t hits = draw_binomial(shots, q, rng_);
  return debias_magnitude(static_cast<double>(hits) / static_cast<double>(shots), config_.spam_lambda, n);
}

}  // namespace hamlearn
