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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "hamlearn/hamiltonian.hpp"
#include "hamlearn/isolation.hpp"
#include "hamlearn/kernels.hpp"

namespace {

using namespace hamlearn;

Eigen::MatrixXcd random_matrix(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::srand(static_cast<unsigned>(n));
  return Eigen::MatrixXcd::Random(dim, dim);
}

template <void (*Transform)(Eigen::MatrixXcd&)>
void BM_PauliTransform(benchmark::State& state) {
  const Eigen::MatrixXcd input = random_matrix(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Eigen::MatrixXcd m = input;
    Transform(m);
    benchmark::DoNotOptimize(m.data());
  }
}
BENCHMARK(BM_PauliTransform<kernels::serial::pauli_transform>)->Name("pauli_transform/serial")->DenseRange(4, 10, 2);
BENCHMARK(BM_PauliTransform<kernels::omp::pauli_transform>)->Name("pauli_transform/omp")->DenseRange(4, 10, 2);

template <void (*Accumulate)(const std::vector<kernels::DenseTerm>&, Eigen::MatrixXcd&)>
void BM_AccumulateTerms(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(5);
  const auto terms = kernels::flatten_terms(random_instance(n, 64, InstanceSpec{}, rng));
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd out(dim, dim);
  for (auto _ : state) {
    out.setZero();
    Accumulate(terms, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_AccumulateTerms<kernels::serial::accumulate_terms>)->Name("accumulate_terms/serial")->DenseRange(6, 12, 2);
BENCHMARK(BM_AccumulateTerms<kernels::omp::accumulate_terms>)->Name("accumulate_terms/omp")->DenseRange(6, 12, 2);

template <bool Parallel>
void BM_IsolationTrials(benchmark::State& state) {
  Rng rng(6);
  const SparseHamiltonian h = random_instance(8, 16, InstanceSpec{}, rng);
  const PauliString target = h.terms().begin()->first;
  const auto trials = static_cast<std::size_t>(state.range(0));
  auto body = [&](std::size_t, Rng& local) {
    const IsolationDraw d = draw_isolation(h, h.sparsity(), local);
    return d.survivors.size() == 1 && d.survivors.count(target) == 1 ? 1 : 0;
  };
  for (auto _ : state) {
    std::vector<int> hits;
    if constexpr (Parallel) {
      hits = kernels::map_trials<int>(trials, Rng(7), body);
    } else {
      hits = kernels::map_trials_with<int>(
          [](std::size_t c, auto&& fn) { kernels::serial::for_each_index(c, fn); }, trials, Rng(7), body);
    }
    benchmark::DoNotOptimize(hits.data());
  }
}
BENCHMARK(BM_IsolationTrials<false>)->Name("isolation_trials/serial")->Arg(4096);
BENCHMARK(BM_IsolationTrials<true>)->Name("isolation_trials/omp")->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
