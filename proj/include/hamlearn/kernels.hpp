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

#include <algorithm>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hamlearn/rng.hpp"

namespace hamlearn {
class SparseHamiltonian;
}

/// Data-parallel inner loops. Every kernel exists twice: `serial` is the
/// reference implementation kept for testing, `omp` is the OpenMP version
/// the library calls. Both produce identical results for identical inputs.
namespace hamlearn::kernels {

/// One Pauli term flattened for dense assembly: the entry (col ^ x_mask, col)
/// receives weight * (-1)^{popcount(z_mask & col)}.
struct DenseTerm {
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;
  std::complex<double> weight;
};

std::vector<DenseTerm> flatten_terms(const SparseHamiltonian& h);

/// Row/column slot holding u_P after pauli_transform.
inline std::pair<std::uint64_t, std::uint64_t> coefficient_slot(std::uint64_t x_mask, std::uint64_t z_mask) {
  return {x_mask ^ z_mask, z_mask};
}

namespace serial {

/// In-place map from a 2^n x 2^n matrix U to its Pauli coefficients
/// u_P = Tr[P U] / 2^n, stored at coefficient_slot(P). Cost O(n 4^n).
void pauli_transform(Eigen::MatrixXcd& m);

/// out += sum of the terms as a dense matrix; `out` must be square 2^n.
void accumulate_terms(const std::vector<DenseTerm>& terms, Eigen::MatrixXcd& out);

template <class F>
void for_each_index(std::size_t count, F&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

}  // namespace serial

namespace omp {

void pauli_transform(Eigen::MatrixXcd& m);
void accumulate_terms(const std::vector<DenseTerm>& terms, Eigen::MatrixXcd& out);

/// Parallel loop; the first exception thrown by any iteration is rethrown
/// after the loop.
template <class F>
void for_each_index(std::size_t count, F&& fn) {
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < total; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace omp

/// Runs `count` independent trials; trial i receives master.derive(i), so
/// results are identical for any thread count and for the serial path.
template <class R, class Loop, class F>
std::vector<R> map_trials_with(Loop&& loop, std::size_t count, const Rng& master, F&& fn) {
  static_assert(!std::is_same_v<R, bool>, "std::vector<bool> is not safe for concurrent writes");
  std::vector<R> out(count);
  loop(count, [&](std::size_t i) {
    Rng rng = master.derive(i);
    out[i] = fn(i, rng);
  });
  return out;
}

template <class R, class F>
std::vector<R> map_trials(std::size_t count, const Rng& master, F&& fn) {
  return map_trials_with<R>([](std::size_t c, auto&& body) { omp::for_each_index(c, body); },
                            count, master, std::forward<F>(fn));
}

template <class R, class F>
std::vector<R> map_trials_serial(std::size_t count, const Rng& master, F&& fn) {
  return map_trials_with<R>([](std::size_t c, auto&& body) { serial::for_each_index(c, body); },
                            count, master, std::forward<F>(fn));
}

/// Like map_trials, but trials are grouped into `chunks` contiguous blocks
/// that share one derived generator (block b uses master.derive(b)).
/// Avoids per-trial generator setup for cheap trials.
template <class R, class F>
std::vector<R> map_trials_chunked(std::size_t count, std::size_t chunks, const Rng& master, F&& fn) {
  static_assert(!std::is_same_v<R, bool>, "std::vector<bool> is not safe for concurrent writes");
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  std::vector<R> out(count);
  omp::for_each_index(chunks, [&](std::size_t b) {
    Rng rng = master.derive(b);
    const std::size_t lo = count * b / chunks;
    const std::size_t hi = count * (b + 1) / chunks;
    for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i, rng);
  });
  return out;
}

void set_num_threads(int threads);
int max_threads();

}  // namespace hamlearn::kernels
