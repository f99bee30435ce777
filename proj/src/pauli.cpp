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

#include "hamlearn/pauli.hpp"

#include <algorithm>
#include <bit>

#include "hamlearn/errors.hpp"

namespace hamlearn {

namespace {

constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

void require_same_size(const PauliString& p, const PauliString& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw UsageError("Pauli strings act on different qubit counts: " +
                     std::to_string(p.num_qubits()) + " vs " +
                     std::to_string(q.num_qubits()));
  }
}

// Clears bits beyond n in the last word.
std::uint64_t tail_mask(int n) {
  const int r = n % kWordBits;
  return r == 0 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
}

}  // namespace

std::complex<double> Phase::value() const {
  switch (exponent & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

PauliString::PauliString(int num_qubits) : n_(num_qubits) {
  if (num_qubits < 0) throw UsageError("negative qubit count");
  x_.assign(words_for(num_qubits), 0);
  z_.assign(words_for(num_qubits), 0);
}

PauliString PauliString::from_letters(std::string_view letters) {
  PauliString p(static_cast<int>(letters.size()));
  for (int k = 0; k < p.n_; ++k) p.set_letter(k, letters[k]);
  return p;
}

bool PauliString::x(int qubit) const {
  return (x_[qubit / kWordBits] >> (qubit % kWordBits)) & 1U;
}

bool PauliString::z(int qubit) const {
  return (z_[qubit / kWordBits] >> (qubit % kWordBits)) & 1U;
}

char PauliString::letter(int qubit) const {
  static constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};
  return kLetters[(x(qubit) ? 1 : 0) | (z(qubit) ? 2 : 0)];
}

void PauliString::set(int qubit, bool x_bit, bool z_bit) {
  if (qubit < 0 || qubit >= n_) throw UsageError("qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (qubit % kWordBits);
  auto& xw = x_[qubit / kWordBits];
  auto& zw = z_[qubit / kWordBits];
  xw = x_bit ? (xw | bit) : (xw & ~bit);
  zw = z_bit ? (zw | bit) : (zw & ~bit);
}

void PauliString::set_letter(int qubit, char letter) {
  switch (letter) {
    case 'I': set(qubit, false, false); break;
    case 'X': set(qubit, true, false); break;
    case 'Y': set(qubit, true, true); break;
    case 'Z': set(qubit, false, true); break;
    default:
      throw UsageError(std::string("invalid Pauli letter '") + letter + "'");
  }
}

bool PauliString::is_identity() const {
  return std::all_of(x_.begin(), x_.end(), [](auto w) { return w == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](auto w) { return w == 0; });
}

int PauliString::weight() const {
  int w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
  return w;
}

int PauliString::y_count() const {
  int w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] & z_[i]);
  return w;
}

std::string PauliString::to_letters() const {
  std::string s(n_, 'I');
  for (int k = 0; k < n_; ++k) s[k] = letter(k);
  return s;
}

std::uint64_t PauliString::basis_x_mask() const {
  std::uint64_t m = 0;
  for (int k = 0; k < n_; ++k)
    if (x(k)) m |= std::uint64_t{1} << (n_ - 1 - k);
  return m;
}

std::uint64_t PauliString::basis_z_mask() const {
  std::uint64_t m = 0;
  for (int k = 0; k < n_; ++k)
    if (z(k)) m |= std::uint64_t{1} << (n_ - 1 - k);
  return m;
}

bool operator<(const PauliString& a, const PauliString& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  // Compare by letters from qubit 0 so ordered containers list strings in a
  // readable order.
  for (int k = 0; k < a.n_; ++k) {
    const int la = (a.x(k) ? 1 : 0) | (a.z(k) ? 2 : 0);
    const int lb = (b.x(k) ? 1 : 0) | (b.z(k) ? 2 : 0);
    if (la != lb) return la < lb;
  }
  return false;
}

std::size_t PauliStringHash::operator()(const PauliString& p) const noexcept {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(p.num_qubits()));
  for (std::size_t i = 0; i < p.x_words().size(); ++i) {
    h = splitmix64(h ^ p.x_words()[i]);
    h = splitmix64(h ^ p.z_words()[i]);
  }
  return static_cast<std::size_t>(h);
}

int symplectic_product(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  const auto& px = p.x_words();
  const auto& pz = p.z_words();
  const auto& qx = q.x_words();
  const auto& qz = q.z_words();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < px.size(); ++i) acc ^= (px[i] & qz[i]) ^ (pz[i] & qx[i]);
  return std::popcount(acc) & 1;
}

PauliProduct multiply(const PauliString& p, const PauliString& q) {
  require_same_size(p, q);
  PauliString out(p.num_qubits());
  int plus = 0;
  int minus = 0;
  for (std::size_t i = 0; i < p.x_words().size(); ++i) {
    const std::uint64_t x1 = p.x_words()[i], z1 = p.z_words()[i];
    const std::uint64_t x2 = q.x_words()[i], z2 = q.z_words()[i];
    // Per-qubit exponent of i picked up by the Hermitian single-qubit
    // products: Y*. gives z2-x2, X*. gives z2(2x2-1), Z*. gives x2(1-2z2).
    const std::uint64_t y1 = x1 & z1, xo = x1 & ~z1, zo = ~x1 & z1;
    plus += std::popcount((y1 & z2 & ~x2) | (xo & z2 & x2) | (zo & x2 & ~z2));
    minus += std::popcount((y1 & x2 & ~z2) | (xo & z2 & ~x2) | (zo & x2 & z2));
    out.x_words()[i] = x1 ^ x2;
    out.z_words()[i] = z1 ^ z2;
  }
  return {std::move(out), Phase{static_cast<std::uint8_t>(((plus - minus) % 4 + 4) % 4)}};
}

Eigen::MatrixXcd dense(const PauliString& p, int dense_limit) {
  const int n = p.num_qubits();
  if (n > dense_limit) {
    throw CapacityError("dense matrix requested for " + std::to_string(n) +
                        " qubits; limit is " + std::to_string(dense_limit));
  }
  const std::uint64_t dim = std::uint64_t{1} << n;
  const std::uint64_t xm = p.basis_x_mask();
  const std::uint64_t zm = p.basis_z_mask();
  const std::complex<double> base = Phase{static_cast<std::uint8_t>(p.y_count() & 3)}.value();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::uint64_t col = 0; col < dim; ++col) {
    const double sign = (std::popcount(zm & col) & 1) ? -1.0 : 1.0;
    m(col ^ xm, col) = sign * base;
  }
  return m;
}

PauliString random_uniform(int num_qubits, Rng& rng) {
  PauliString p(num_qubits);
  auto& xw = p.x_words();
  auto& zw = p.z_words();
  for (std::size_t i = 0; i < xw.size(); ++i) {
    xw[i] = rng.next_u64();
    zw[i] = rng.next_u64();
  }
  if (!xw.empty()) {
    xw.back() &= tail_mask(num_qubits);
    zw.back() &= tail_mask(num_qubits);
  }
  return p;
}

PauliString random_commuting(const PauliString& p, Rng& rng) {
  PauliString q = random_uniform(p.num_qubits(), rng);
  if (p.is_identity()) return q;
  int pivot = 0;
  while (!p.x(pivot) && !p.z(pivot)) ++pivot;
  if (symplectic_product(p, q) == 1) {
    // The pivot coordinate enters the form with coefficient 1, so flipping
    // it fixes the constraint; the other 2n-1 bits stay uniform.
    if (p.x(pivot)) {
      q.set(pivot, q.x(pivot), !q.z(pivot));
    } else {
      q.set(pivot, !q.x(pivot), q.z(pivot));
    }
  }
  return q;
}

std::vector<PauliString> all_pauli_strings(int num_qubits) {
  if (num_qubits > 12) throw CapacityError("enumeration of 4^n strings limited to n <= 12");
  const std::uint64_t count = std::uint64_t{1} << (2 * num_qubits);
  std::vector<PauliString> out;
  out.reserve(count);
  static constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
  for (std::uint64_t code = 0; code < count; ++code) {
    PauliString p(num_qubits);
    for (int k = 0; k < num_qubits; ++k) p.set_letter(k, kLetters[(code >> (2 * (num_qubits - 1 - k))) & 3]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace hamlearn
