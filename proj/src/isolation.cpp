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

#include "hamlearn/isolation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

#include "hamlearn/errors.hpp"
#include "hamlearn/kernels.hpp"

namespace hamlearn {

namespace {
constexpr std::size_t kTrialChunks = 256;
}  // namespace

std::size_t isolation_rounds(std::size_t s_bound) {
  if (s_bound < 1) throw UsageError("s_bound must be at least 1");
  return static_cast<std::size_t>(std::bit_width(s_bound - 1)) + 2;
}

std::size_t targeted_isolation_rounds(std::size_t s_bound, double delta) {
  if (s_bound < 1) throw UsageError("s_bound must be at least 1");
  if (!(delta > 0.0 && delta < 1.0)) throw UsageError("delta must lie in (0, 1)");
  const double raw = std::log2(2.0 * static_cast<double>(s_bound) / delta) + 2.0;
  const double nearest = std::round(raw);
  // Exact powers of two must not round up through floating-point noise.
  const double value = std::abs(raw - nearest) < 1e-9 ? nearest : std::ceil(raw);
  return static_cast<std::size_t>(value);
}

std::set<PauliString> surviving_terms(const SparseHamiltonian& h, const std::vector<PauliString>& qs) {
  std::set<PauliString> out;
  for (const auto& [p, c] : h.terms()) {
    bool keep = true;
    for (const auto& q : qs) {
      if (!commutes(p, q)) {
        keep = false;
        break;
      }
    }
    if (keep) out.insert(p);
  }
  return out;
}

IsolationDraw draw_isolation(const SparseHamiltonian& h, std::size_t s_bound, Rng& rng) {
  IsolationDraw draw;
  draw.r = isolation_rounds(s_bound);
  draw.qs.reserve(draw.r);
  for (std::size_t i = 0; i < draw.r; ++i) draw.qs.push_back(random_uniform(h.num_qubits(), rng));
  draw.survivors = surviving_terms(h, draw.qs);
  return draw;
}

IsolationDraw draw_isolation_for_target(const SparseHamiltonian& h, const PauliString& p0, std::size_t s_bound,
                                        double delta, Rng& rng) {
  if (p0.num_qubits() != h.num_qubits()) throw UsageError("target string has wrong qubit count");
  if (p0.is_identity()) throw UsageError("cannot isolate the identity");
  IsolationDraw draw;
  draw.r = targeted_isolation_rounds(s_bound, delta);
  draw.qs.reserve(draw.r);
  for (std::size_t i = 0; i < draw.r; ++i) draw.qs.push_back(random_commuting(p0, rng));
  draw.survivors = surviving_terms(h, draw.qs);
  return draw;
}

double isolation_probability_empirical(const SparseHamiltonian& h, const PauliString& p0, std::size_t trials,
                                       const Rng& rng) {
  if (!h.contains(p0)) throw UsageError("target string is not in the support");
  if (trials < 1) throw UsageError("trials must be positive");
  const std::size_t s = h.sparsity();
  const auto hits = kernels::map_trials_chunked<int>(trials, kTrialChunks, rng, [&](std::size_t, Rng& local) {
    const IsolationDraw draw = draw_isolation(h, s, local);
    return draw.survivors.size() == 1 && draw.survivors.count(p0) == 1 ? 1 : 0;
  });
  std::size_t count = 0;
  for (int v : hits) count += static_cast<std::size_t>(v);
  return static_cast<double>(count) / static_cast<double>(trials);
}

VVStatistics vv_statistics(std::size_t set_size, std::size_t r, std::size_t trials, const Rng& rng, int m) {
  if (m < 1 || m > 63) throw UsageError("bit width must lie in [1, 63]");
  if (trials < 1) throw UsageError("trials must be positive");
  const std::uint64_t universe = (std::uint64_t{1} << m) - 1;
  if (set_size > universe) throw UsageError("set size exceeds the number of nonzero strings");

  const auto sizes = kernels::map_trials_chunked<std::size_t>(trials, kTrialChunks, rng, [&](std::size_t, Rng& local) {
    std::vector<std::uint64_t> xs;
    xs.reserve(set_size);
    std::unordered_set<std::uint64_t> members;
    const bool small = set_size <= 64;
    while (xs.size() < set_size) {
      const std::uint64_t x = 1 + local.below(universe);
      const bool fresh = small ? std::find(xs.begin(), xs.end(), x) == xs.end() : members.insert(x).second;
      if (fresh) xs.push_back(x);
    }
    std::vector<std::uint64_t> ys(r);
    for (auto& y : ys) y = local.below(universe + 1);
    std::size_t survivors = 0;
    for (std::uint64_t x : xs) {
      bool keep = true;
      for (std::uint64_t y : ys) {
        if (std::popcount(x & y) & 1) {
          keep = false;
          break;
        }
      }
      if (keep) ++survivors;
    }
    return survivors;
  });

  VVStatistics out;
  out.trials = trials;
  double sum = 0.0;
  std::size_t empty = 0;
  for (std::size_t v : sizes) {
    sum += static_cast<double>(v);
    if (v == 0) ++empty;
  }
  out.mean = sum / static_cast<double>(trials);
  double sq = 0.0;
  double quartic = 0.0;
  for (std::size_t v : sizes) {
    const double d2 = (static_cast<double>(v) - out.mean) * (static_cast<double>(v) - out.mean);
    sq += d2;
    quartic += d2 * d2;
  }
  out.variance = trials > 1 ? sq / static_cast<double>(trials - 1) : 0.0;
  out.fourth_moment = quartic / static_cast<double>(trials);
  out.p_empty = static_cast<double>(empty) / static_cast<double>(trials);
  return out;
}

}  // namespace hamlearn
