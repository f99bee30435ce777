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

#include <cstdint>
#include <random>

namespace hamlearn {

/// Seeded pseudo-random source passed explicitly through every randomized
/// routine. Wraps std::mt19937_64 and converts raw words to doubles and
/// bits without going through implementation-defined distributions, so
/// replays are bit-identical across standard libraries.
class Rng {
 public:
  using engine_type = std::mt19937_64;

  explicit Rng(std::uint64_t seed = 0) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  /// Independent stream derived from this generator's seed and a stream
  /// index; used to give every Monte-Carlo trial its own generator.
  Rng derive(std::uint64_t stream) const;

  engine_type& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  engine_type engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace hamlearn
