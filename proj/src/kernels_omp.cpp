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

#include <bit>

#include <omp.h>

#include "hamlearn/kernels.hpp"

namespace hamlearn::kernels {

namespace omp {

void pauli_transform(Eigen::MatrixXcd& m) {
  const auto dim = static_cast<std::int64_t>(m.rows());
  const std::complex<double> half_i(0.0, 0.5);
  std::complex<double>* data = m.data();
  for (std::int64_t bit = 1; bit < dim; bit <<= 1) {
    // Each column pair (c, c|bit) is owned by one iteration.
#pragma omp parallel for schedule(static) if (dim >= 64)
    for (std::int64_t c = 0; c < dim; ++c) {
      if (c & bit) continue;
      std::complex<double>* lo = data + c * dim;
      std::complex<double>* hi = data + (c | bit) * dim;
      for (std::int64_t r = 0; r < dim; ++r) {
        if (r & bit) continue;
        const auto m00 = lo[r], m01 = hi[r];
        const auto m10 = lo[r | bit], m11 = hi[r | bit];
        lo[r] = 0.5 * (m00 + m11);
        lo[r | bit] = 0.5 * (m01 + m10);
        hi[r] = half_i * (m01 - m10);
        hi[r | bit] = 0.5 * (m00 - m11);
      }
    }
  }
}

void accumulate_terms(const std::vector<DenseTerm>& terms, Eigen::MatrixXcd& out) {
  const auto dim = static_cast<std::int64_t>(out.rows());
#pragma omp parallel for schedule(static) if (dim >= 64)
  for (std::int64_t col = 0; col < dim; ++col) {
    const auto ucol = static_cast<std::uint64_t>(col);
    for (const auto& t : terms) {
      const double sign = (std::popcount(t.z_mask & ucol) & 1) ? -1.0 : 1.0;
      out(static_cast<Eigen::Index>(ucol ^ t.x_mask), col) += sign * t.weight;
    }
  }
}

}  // namespace omp

void set_num_threads(int threads) {
  if (threads > 0) omp_set_num_threads(threads);
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace hamlearn::kernels
