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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "hamlearn/errors.hpp"
#include "hamlearn/kernels.hpp"
#include "hamlearn/linalg.hpp"

namespace hamlearn {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_pair(const SparseHamiltonian& h1, const SparseHamiltonian& h2, int dense_limit) {
  if (h1.num_qubits() != h2.num_qubits()) throw UsageError("Hamiltonians act on different qubit counts");
  if (h1.num_qubits() > dense_limit) throw CapacityError("distance computation above the dense limit");
}

void check_budget(double budget, std::size_t grid) {
  if (!(budget > 0.0) || !std::isfinite(budget)) throw UsageError("distance budget must be positive");
  if (grid < 2) throw UsageError("distance grid needs at least two points");
}

/// Grid maximum plus golden-section refinement around the best grid point.
DistanceResult maximize(const std::function<double(double)>& f, double budget, std::size_t grid, double lipschitz,
                        DistanceKind kind) {
  std::vector<double> values(grid);
  const double step = budget / static_cast<double>(grid - 1);
  kernels::omp::for_each_index(grid, [&](std::size_t k) { values[k] = f(step * static_cast<double>(k)); });
  const auto best = static_cast<std::size_t>(std::max_element(values.begin(), values.end()) - values.begin());

  DistanceResult out;
  out.kind = kind;
  out.value = values[best];
  out.argmax = step * static_cast<double>(best);

  double lo = best == 0 ? 0.0 : step * static_cast<double>(best - 1);
  double hi = best + 1 == grid ? budget : step * static_cast<double>(best + 1);
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - ratio * (hi - lo);
  double b = lo + ratio * (hi - lo);
  double fa = f(a);
  double fb = f(b);
  for (int it = 0; it < 60 && hi - lo > 1e-14 * std::max(1.0, budget); ++it) {
    if (fa < fb) {
      lo = a;
      a = b;
      fa = fb;
      b = lo + ratio * (hi - lo);
      fb = f(b);
    } else {
      hi = b;
      b = a;
      fb = fa;
      a = hi - ratio * (hi - lo);
      fa = f(a);
    }
  }
  for (const auto& [x, v] : {std::pair{a, fa}, std::pair{b, fb}}) {
    if (v > out.value) {
      out.value = v;
      out.argmax = x;
    }
  }
  out.value = std::clamp(out.value, 0.0, 1.0);
  out.grid_error = lipschitz * budget / static_cast<double>(grid);
  return out;
}

/// Energies of the computational basis states of a Z-type Hamiltonian.
Eigen::VectorXd diagonal_energies(const SparseHamiltonian& h) {
  const std::uint64_t dim = std::uint64_t{1} << h.num_qubits();
  Eigen::VectorXd e = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t zm = p.basis_z_mask();
    for (std::uint64_t b = 0; b < dim; ++b) e(static_cast<Eigen::Index>(b)) += (std::popcount(zm & b) & 1) ? -c : c;
  }
  return e;
}

Eigen::VectorXd diagonal_gibbs(const Eigen::VectorXd& e, double beta) {
  const double shift = beta >= 0 ? e.minCoeff() : e.maxCoeff();
  Eigen::VectorXd w = (-beta * (e.array() - shift)).exp();
  return w / w.sum();
}

}  // namespace

const char* to_string(DistanceKind kind) {
  return kind == DistanceKind::kTimeConstrained ? "time_constrained" : "temperature_constrained";
}

double half_diamond_unitary(const Eigen::MatrixXcd& v, const Eigen::MatrixXcd& w) {
  if (v.rows() != w.rows() || v.cols() != w.cols()) throw UsageError("unitaries have different sizes");
  if (!linalg::is_unitary(v, 1e-10) || !linalg::is_unitary(w, 1e-10)) throw UsageError("input is not unitary");
  std::vector<double> phases = linalg::unitary_eigenphases(v.adjoint() * w);
  std::sort(phases.begin(), phases.end());
  double largest_gap = kTwoPi - phases.back() + phases.front();
  for (std::size_t j = 1; j < phases.size(); ++j) largest_gap = std::max(largest_gap, phases[j] - phases[j - 1]);
  const double spread = std::max(0.0, kTwoPi - largest_gap);
  if (spread > std::numbers::pi) return 1.0;
  return std::sin(spread / 2.0);
}

DistanceResult d_T(const SparseHamiltonian& h1, const SparseHamiltonian& h2, double T, std::size_t grid,
                   int dense_limit) {
  check_pair(h1, h2, dense_limit);
  check_budget(T, grid);
  const linalg::HermitianEigen e1 = linalg::eigh(dense_matrix(h1, dense_limit));
  const linalg::HermitianEigen e2 = linalg::eigh(dense_matrix(h2, dense_limit));
  const double lipschitz = e1.values.cwiseAbs().maxCoeff() + e2.values.cwiseAbs().maxCoeff();
  auto f = [&](double t) { return half_diamond_unitary(linalg::evolution(e1, t), linalg::evolution(e2, t)); };
  return maximize(f, T, grid, lipschitz, DistanceKind::kTimeConstrained);
}

double gibbs_trace_distance(const SparseHamiltonian& h1, const SparseHamiltonian& h2, double beta,
                            int dense_limit) {
  check_pair(h1, h2, dense_limit);
  if (is_diagonal(h1) && is_diagonal(h2)) {
    return (diagonal_gibbs(diagonal_energies(h1), beta) - diagonal_gibbs(diagonal_energies(h2), beta))
        .cwiseAbs()
        .sum();
  }
  const Eigen::MatrixXcd rho1 = linalg::gibbs_state(linalg::eigh(dense_matrix(h1, dense_limit)), beta);
  const Eigen::MatrixXcd rho2 = linalg::gibbs_state(linalg::eigh(dense_matrix(h2, dense_limit)), beta);
  return linalg::hermitian_trace_norm(rho1 - rho2);
}

DistanceResult d_B(const SparseHamiltonian& h1, const SparseHamiltonian& h2, double B, std::size_t grid,
                   int dense_limit) {
  check_pair(h1, h2, dense_limit);
  check_budget(B, grid);
  if (is_diagonal(h1) && is_diagonal(h2)) {
    const Eigen::VectorXd d1 = diagonal_energies(h1);
    const Eigen::VectorXd d2 = diagonal_energies(h2);
    const double lipschitz = d1.cwiseAbs().maxCoeff() + d2.cwiseAbs().maxCoeff();
    auto f = [&](double beta) {
      return 0.5 * (diagonal_gibbs(d1, beta) - diagonal_gibbs(d2, beta)).cwiseAbs().sum();
    };
    return maximize(f, B, grid, lipschitz, DistanceKind::kTemperatureConstrained);
  }
  const linalg::HermitianEigen e1 = linalg::eigh(dense_matrix(h1, dense_limit));
  const linalg::HermitianEigen e2 = linalg::eigh(dense_matrix(h2, dense_limit));
  const double lipschitz = e1.values.cwiseAbs().maxCoeff() + e2.values.cwiseAbs().maxCoeff();
  auto f = [&](double beta) {
    return 0.5 * linalg::hermitian_trace_norm(linalg::gibbs_state(e1, beta) - linalg::gibbs_state(e2, beta));
  };
  return maximize(f, B, grid, lipschitz, DistanceKind::kTemperatureConstrained);
}

GibbsBoundCheck gibbs_trace_bound_check(const SparseHamiltonian& h1, const SparseHamiltonian& h2,
                                        int dense_limit) {
  check_pair(h1, h2, dense_limit);
  GibbsBoundCheck out;
  out.lhs = gibbs_trace_distance(h1, h2, -1.0, dense_limit);
  out.rhs_new = operator_norm(h1 - h2, dense_limit);
  out.rhs_old = 2.0 * std::expm1(out.rhs_new);
  return out;
}

CounterexamplePair counterexample_family(int n, int dense_limit) {
  if (n < 1) throw UsageError("counterexample needs at least one qubit");
  if (n > dense_limit) throw CapacityError("counterexample above the dense limit");
  CounterexamplePair out{SparseHamiltonian(n), SparseHamiltonian(n), {}, {}};
  const std::uint64_t dim = std::uint64_t{1} << n;
  out.dense1 = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  out.dense1(0, 0) = 1.0;
  out.dense1(static_cast<Eigen::Index>(dim - 1), static_cast<Eigen::Index>(dim - 1)) = -1.0;
  out.dense2 = -out.dense1;
  // <0^n|Z_S|0^n> - <1^n|Z_S|1^n> = 1 - (-1)^{|S|}, nonzero for odd |S|.
  const double weight = 2.0 / static_cast<double>(dim);
  for (std::uint64_t subset = 1; subset < dim; ++subset) {
    if ((std::popcount(subset) & 1) == 0) continue;
    PauliString z(n);
    for (int k = 0; k < n; ++k) {
      if (subset & (std::uint64_t{1} << k)) z.set(k, false, true);
    }
    out.h1.set_term(z, weight);
    out.h2.set_term(z, -weight);
  }
  return out;
}

double counterexample_trace_distance(int n, double beta) {
  return 2.0 * (std::exp(beta) - std::exp(-beta)) / (std::ldexp(1.0, n) - 2.0 + std::exp(beta) + std::exp(-beta));
}

double circle_p(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

double circle_q(double x) { return circle_p(x + std::numbers::pi) - std::numbers::pi; }

double minmax_closed(double a, double b) {
  return 0.5 * std::min(std::abs(circle_q(a) - circle_q(b)), std::abs(circle_p(a) - circle_p(b)));
}

double eigenphase_lower_bound(const SparseHamiltonian& h, int dense_limit) {
  const SpectralData spec = spectral_data(h, dense_limit);
  const auto& ev = spec.eigenvalues;
  double best = 0.0;
  for (Eigen::Index j = 0; j < ev.size(); ++j) {
    const double pj = circle_p(ev(j));
    const double qj = circle_q(ev(j));
    for (Eigen::Index k = j + 1; k < ev.size(); ++k) {
      best = std::max(best, std::min(std::abs(pj - circle_p(ev(k))), std::abs(qj - circle_q(ev(k)))));
    }
  }
  return best / kTwoPi;
}

}  // namespace hamlearn
