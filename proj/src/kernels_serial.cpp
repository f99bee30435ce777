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

#include "hamlearn/kernels.hpp"

#include <bit>

#include "hamlearn/hamiltonian.hpp"

namespace hamlearn::kernels {

std::vector<DenseTerm> flatten_terms(const SparseHamiltonian& h) {
  std::vector<DenseTerm> out;
  out.reserve(h.sparsity());
  for (const auto& [p, c] : h.terms()) {
    const Phase phase{static_cast<std::uint8_t>(p.y_count() & 3)};
    out.push_back({p.basis_x_mask(), p.basis_z_mask(), c * phase.value()});
  }
  return out;
}

namespace serial {

void pauli_transform(Eigen::MatrixXcd& m) {
  const auto dim = static_cast<std::uint64_t>(m.rows());
  const std::complex<double> half_i(0.0, 0.5);
  for (std::uint64_t bit = 1; bit < dim; bit <<= 1) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      if (c & bit) continue;
      for (std::uint64_t r = 0; r < dim; ++r) {
        if (r & bit) continue;
        const auto m00 = m(r, c), m01 = m(r, c | bit);
        const auto m10 = m(r | bit, c), m11 = m(r | bit, c | bit);
        m(r, c) = 0.5 * (m00 + m11);
        m(r | bit, c) = 0.5 * (m01 + m10);
        m(r, c | bit) = half_i * (m01 - m10);
        m(r | bit, c | bit) = 0.5 * (m00 - m11);
      }
    }
  }
}

void accumulate_terms(const std::vector<DenseTerm>& terms, Eigen::MatrixXcd& out) {
  const auto dim = static_cast<std::uint64_t>(out.rows());
  for (std::uint64_t col = 0; col < dim; ++col) {
    for (const auto& t : terms) {
      const double sign = (std::popcount(t.z_mask & col) & 1) ? -1.0 : 1.0;
      out(col ^ t.x_mask, col) += sign * t.weight;
    }
  }
}

}  // namespace serial
}  // namespace hamlearn::kernels
