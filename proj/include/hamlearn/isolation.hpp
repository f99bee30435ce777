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
#include <vector>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/pauli.hpp"
#include "hamlearn/rng.hpp"

namespace hamlearn {

/// Conjugation strings Q_1..Q_r and the terms of H commuting with all of them.
struct IsolationDraw {
  std::vector<PauliString> qs;
  std::size_t r = 0;
  std::set<PauliString> survivors;
};

/// r = ceil(log2 s) + 2.
std::size_t isolation_rounds(std::size_t s_bound);

/// r = ceil(log2(2 s / delta) + 2).
std::size_t targeted_isolation_rounds(std::size_t s_bound, double delta);

/// Terms of h commuting with every element of qs.
std::set<PauliString> surviving_terms(const SparseHamiltonian& h, const std::vector<PauliString>& qs);

/// r uniform Paulis with r = isolation_rounds(s_bound).
IsolationDraw draw_isolation(const SparseHamiltonian& h, std::size_t s_bound, Rng& rng);

/// r = targeted_isolation_rounds(s_bound, delta) Paulis, each commuting with p0.
IsolationDraw draw_isolation_for_target(const SparseHamiltonian& h, const PauliString& p0, std::size_t s_bound,
                                        double delta, Rng& rng);

/// Fraction of draw_isolation trials (s_bound = sparsity of h) leaving
/// exactly {p0}. Deterministic for a given rng and trial count.
double isolation_probability_empirical(const SparseHamiltonian& h, const PauliString& p0, std::size_t trials,
                                       const Rng& rng);

struct VVStatistics {
  double mean = 0.0;
  double variance = 0.0;  ///< unbiased sample variance
  double p_empty = 0.0;
  /// Fourth central moment, for the standard error of the variance.
  double fourth_moment = 0.0;
  std::size_t trials = 0;
};

/**
 * @brief Monte-Carlo survival statistics of random parity hashing.
 *
 * Each trial draws a random subset X of {0,1}^m minus the zero string with
 * |X| = set_size and r uniform y_i, then counts the x in X with
 * x.y_i = 0 for all i.
 */
VVStatistics vv_statistics(std::size_t set_size, std::size_t r, std::size_t trials, const Rng& rng, int m = 20);

}  // namespace hamlearn
