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

#include "hamlearn/hamiltonian.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "hamlearn/errors.hpp"
#include "hamlearn/kernels.hpp"
#include "hamlearn/linalg.hpp"

namespace hamlearn {

SparseHamiltonian::SparseHamiltonian(
    int num_qubits, std::initializer_list<std::pair<std::string_view, double>> terms)
    : n_(num_qubits) {
  for (const auto& [letters, c] : terms) add_term(PauliString::from_letters(letters), c);
}

void SparseHamiltonian::check(const PauliString& p) const {
  if (p.num_qubits() != n_) {
    throw UsageError("term " + p.to_letters() + " does not act on " + std::to_string(n_) + " qubits");
  }
  if (p.is_identity()) throw UsageError("identity term not allowed in a traceless Hamiltonian");
}

double SparseHamiltonian::coeff(const PauliString& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

void SparseHamiltonian::add_term(const PauliString& p, double c) {
  check(p);
  const double v = coeff(p) + c;
  if (std::abs(v) < kZeroCoefficient) {
    terms_.erase(p);
  } else {
    terms_[p] = v;
  }
}

void SparseHamiltonian::set_term(const PauliString& p, double c) {
  check(p);
  if (std::abs(c) < kZeroCoefficient) {
    terms_.erase(p);
  } else {
    terms_[p] = c;
  }
}

std::set<PauliString> SparseHamiltonian::support() const {
  std::set<PauliString> out;
  for (const auto& [p, c] : terms_) out.insert(p);
  return out;
}

bool SparseHamiltonian::is_normalized() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return std::abs(kv.second) <= 1.0; });
}

SparseHamiltonian& SparseHamiltonian::operator+=(const SparseHamiltonian& other) {
  if (other.n_ != n_) throw UsageError("Hamiltonians act on different qubit counts");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

SparseHamiltonian& SparseHamiltonian::operator-=(const SparseHamiltonian& other) {
  if (other.n_ != n_) throw UsageError("Hamiltonians act on different qubit counts");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

SparseHamiltonian& SparseHamiltonian::operator*=(double scale) {
  TermMap scaled;
  for (const auto& [p, c] : terms_) {
    if (std::abs(c * scale) >= kZeroCoefficient) scaled.emplace(p, c * scale);
  }
  terms_ = std::move(scaled);
  return *this;
}

std::set<PauliString> effective_support(const SparseHamiltonian& h, double eps) {
  std::set<PauliString> out;
  for (const auto& [p, c] : h.terms())
    if (std::abs(c) >= eps) out.insert(p);
  return out;
}

SparseHamiltonian restrict(const SparseHamiltonian& h, std::span<const PauliString> qs) {
  for (const auto& q : qs) {
    if (q.num_qubits() != h.num_qubits()) throw UsageError("conjugating string has wrong qubit count");
  }
  SparseHamiltonian out(h.num_qubits());
  for (const auto& [p, c] : h.terms()) {
    const bool keep = std::all_of(qs.begin(), qs.end(), [&](const PauliString& q) { return commutes(p, q); });
    if (keep) out.set_term(p, c);
  }
  return out;
}

bool is_diagonal(const SparseHamiltonian& h) {
  return std::all_of(h.terms().begin(), h.terms().end(), [](const auto& kv) {
    const auto& xw = kv.first.x_words();
    return std::all_of(xw.begin(), xw.end(), [](auto w) { return w == 0; });
  });
}

namespace {

void require_dense(int n, int dense_limit) {
  if (n > dense_limit) {
    throw CapacityError("dense Hamiltonian requested for " + std::to_string(n) +
                        " qubits; limit is " + std::to_string(dense_limit));
  }
}

// Diagonal of a Z-type Hamiltonian without building the full matrix.
Eigen::VectorXd diagonal_entries(const SparseHamiltonian& h) {
  const std::uint64_t dim = std::uint64_t{1} << h.num_qubits();
  Eigen::VectorXd d = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (const auto& [p, c] : h.terms()) {
    const std::uint64_t zm = p.basis_z_mask();
    for (std::uint64_t j = 0; j < dim; ++j) d(j) += (std::popcount(zm & j) & 1) ? -c : c;
  }
  return d;
}

}  // namespace

Eigen::MatrixXcd dense_matrix(const SparseHamiltonian& h, int dense_limit) {
  require_dense(h.num_qubits(), dense_limit);
  const Eigen::Index dim = Eigen::Index{1} << h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  kernels::omp::accumulate_terms(kernels::flatten_terms(h), m);
  return m;
}

CoefficientNorms coefficient_norms(const SparseHamiltonian& h) {
  CoefficientNorms n;
  double sq = 0.0;
  for (const auto& [p, c] : h.terms()) {
    n.l1 += std::abs(c);
    sq += c * c;
    n.linf = std::max(n.linf, std::abs(c));
  }
  n.l2 = std::sqrt(sq);
  return n;
}

SpectralData spectral_data(const SparseHamiltonian& h, int dense_limit) {
  require_dense(h.num_qubits(), dense_limit);
  SpectralData out;
  if (is_diagonal(h)) {
    out.eigenvalues = diagonal_entries(h);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  } else {
    out.eigenvalues = linalg::eigh(dense_matrix(h, dense_limit)).values;
  }
  out.spread = out.eigenvalues.size() == 0 ? 0.0 : out.eigenvalues.maxCoeff() - out.eigenvalues.minCoeff();
  return out;
}

double operator_norm(const SparseHamiltonian& h, int dense_limit) {
  if (h.empty()) return 0.0;
  if (h.sparsity() == 1) return std::abs(h.terms().begin()->second);
  const auto spec = spectral_data(h, dense_limit);
  return std::max(std::abs(spec.eigenvalues(0)), std::abs(spec.eigenvalues(spec.eigenvalues.size() - 1)));
}

Norms norms(const SparseHamiltonian& h, int dense_limit) {
  const auto c = coefficient_norms(h);
  return {c.l1, c.l2, c.linf, operator_norm(h, dense_limit)};
}

SparseHamiltonian random_instance(int num_qubits, std::size_t s, const InstanceSpec& spec, Rng& rng) {
  if (num_qubits < 1) throw UsageError("random_instance needs at least one qubit");
  if (spec.coeff_floor < 0 || spec.coeff_floor > spec.coeff_range) {
    throw UsageError("coefficient floor must lie in [0, coeff_range]");
  }
  const double pool = std::ldexp(1.0, 2 * num_qubits) - 1.0;
  if (s < 1 || static_cast<double>(s) > pool) {
    throw UsageError("sparsity " + std::to_string(s) + " outside [1, 4^n - 1]");
  }
  std::vector<PauliString> chosen;
  if (num_qubits <= 6 && static_cast<double>(s) > pool / 2) {
    // Dense regime: partial Fisher-Yates over the explicit list.
    auto all = all_pauli_strings(num_qubits);
    all.erase(all.begin());  // identity is enumerated first
    for (std::size_t i = 0; i < s; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
      chosen.push_back(all[i]);
    }
  } else {
    std::unordered_set<PauliString> seen;
    while (chosen.size() < s) {
      auto p = random_uniform(num_qubits, rng);
      if (p.is_identity() || !seen.insert(p).second) continue;
      chosen.push_back(std::move(p));
    }
  }
  SparseHamiltonian h(num_qubits);
  for (const auto& p : chosen) {
    const double magnitude = rng.uniform(spec.coeff_floor, spec.coeff_range);
    h.set_term(p, rng.coin() ? magnitude : -magnitude);
  }
  return h;
}

}  // namespace hamlearn
