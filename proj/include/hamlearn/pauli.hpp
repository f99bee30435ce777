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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "hamlearn/rng.hpp"

namespace hamlearn {

/// Largest qubit count for which dense 2^n x 2^n matrices are built.
inline constexpr int kDefaultDenseLimit = 12;

/// Power of i: the value is i^exponent, exponent in {0,1,2,3}.
struct Phase {
  std::uint8_t exponent = 0;

  std::complex<double> value() const;
  friend bool operator==(Phase, Phase) = default;
};

/**
 * @brief Hermitian n-qubit Pauli operator in symplectic form.
 *
 * Qubit k carries an X bit a_k and a Z bit b_k packed into 64-bit words.
 * The represented operator is i^{a.b} X^{a_1}Z^{b_1} (x) ... (x) X^{a_n}Z^{b_n}
 * where a.b counts the Y positions, so every value is self-adjoint and
 * squares to the identity. Letter form "XIZY" lists qubit 0 first; in dense
 * matrices qubit 0 is the most significant tensor factor.
 */
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(int num_qubits);

  static PauliString identity(int num_qubits) { return PauliString(num_qubits); }
  /// Parses letters over {I,X,Y,Z}; throws UsageError on anything else.
  static PauliString from_letters(std::string_view letters);

  int num_qubits() const { return n_; }
  bool x(int qubit) const;
  bool z(int qubit) const;
  char letter(int qubit) const;
  void set(int qubit, bool x_bit, bool z_bit);
  void set_letter(int qubit, char letter);

  bool is_identity() const;
  /// Number of non-identity tensor factors.
  int weight() const;
  /// Number of Y factors, i.e. the dot product a.b over the integers.
  int y_count() const;

  std::string to_letters() const;

  const std::vector<std::uint64_t>& x_words() const { return x_; }
  const std::vector<std::uint64_t>& z_words() const { return z_; }
  std::vector<std::uint64_t>& x_words() { return x_; }
  std::vector<std::uint64_t>& z_words() { return z_; }

  /// X and Z parts as dense-basis bit masks (qubit 0 is the top bit).
  /// Only meaningful for n <= 64.
  std::uint64_t basis_x_mask() const;
  std::uint64_t basis_z_mask() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend bool operator<(const PauliString& a, const PauliString& b);

 private:
  int n_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

struct PauliStringHash {
  std::size_t operator()(const PauliString& p) const noexcept;
};

/// Product p*q written as phase * result with result Hermitian.
struct PauliProduct {
  PauliString pauli;
  Phase phase;
};

/// 0 when p and q commute, 1 when they anticommute.
int symplectic_product(const PauliString& p, const PauliString& q);

inline bool commutes(const PauliString& p, const PauliString& q) {
  return symplectic_product(p, q) == 0;
}

PauliProduct multiply(const PauliString& p, const PauliString& q);

/// Dense 2^n x 2^n matrix of p. Throws CapacityError above `dense_limit`.
Eigen::MatrixXcd dense(const PauliString& p, int dense_limit = kDefaultDenseLimit);

/// Uniform over all 4^n strings, identity included.
PauliString random_uniform(int num_qubits, Rng& rng);

/// Uniform over the 4^n/2 strings commuting with p. Samples 2n-1 free bits
/// and solves the remaining one from the symplectic constraint. An identity
/// p imposes no constraint and falls back to random_uniform.
PauliString random_commuting(const PauliString& p, Rng& rng);

/// Enumerates all 4^n strings in a fixed order (test and verification use).
std::vector<PauliString> all_pauli_strings(int num_qubits);

}  // namespace hamlearn

template <>
struct std::hash<hamlearn::PauliString> {
  std::size_t operator()(const hamlearn::PauliString& p) const noexcept {
    return hamlearn::PauliStringHash{}(p);
  }
};
