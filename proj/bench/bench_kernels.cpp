// Copyright 2026 The QDT Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against the blocked OpenMP kernels, and the full
// lattice decomposition. Set OMP_NUM_THREADS to vary the team size.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qdt/decision.hpp"
#include "qdt/hilbert.hpp"
#include "qdt/kernels.hpp"

namespace {

using qdt::Complex;

std::vector<Complex> make_vector(std::size_t n, std::uint64_t seed) {
  return qdt::gaussian_amplitudes(n, seed);
}

void BM_ProspectTermsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = make_vector(n, 1);
  const auto c = make_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qdt::kernels::serial::prospect_terms(a, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ProspectTermsParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = make_vector(n, 1);
  const auto c = make_vector(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(qdt::kernels::prospect_terms(a, c));
  state.SetItemsProcessed(state.iterations() * state.range(0));
  state.counters["threads"] = qdt::kernels::max_threads();
}

void BM_DecomposeLattice(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto prospects = static_cast<std::size_t>(state.range(1));
  const qdt::MindSpace space(qdt::ActionRing::from_dims({dim}));
  const auto s = qdt::random_state(space, 3);
  std::vector<qdt::ProspectState> list;
  for (std::size_t j = 0; j < prospects; ++j)
    list.push_back(qdt::prospect_from_amplitudes(space, "p" + std::to_string(j), make_vector(dim, 10 + j)));
  const qdt::ProspectLattice lattice(std::move(list));
  for (auto _ : state) benchmark::DoNotOptimize(qdt::decompose(s, lattice));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

}  // namespace

BENCHMARK(BM_ProspectTermsSerial)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);
BENCHMARK(BM_ProspectTermsParallel)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);
BENCHMARK(BM_DecomposeLattice)->Args({1 << 10, 16})->Args({1 << 16, 4})->Args({1 << 20, 2});

BENCHMARK_MAIN();
