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

#pragma once

// Test-only helpers. Random inputs here come from the standard library's
// distributions, deliberately not from the engine's own generators.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdt/decision.hpp"
#include "qdt/hilbert.hpp"
#include "qdt/prospects.hpp"

namespace qdt::testutil {

inline std::vector<std::complex<double>> random_complex(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::complex<double>> out(n);
  for (auto& z : out) {
    const double re = normal(gen);
    z = {re, normal(gen)};
  }
  return out;
}

/// Random complex vector with roughly a third of its entries zeroed, and
/// never all of them.
inline std::vector<std::complex<double>> random_sparse_complex(std::size_t n, std::mt19937_64& gen) {
  auto v = random_complex(n, gen);
  std::bernoulli_distribution drop(1.0 / 3.0);
  for (auto& z : v)
    if (drop(gen)) z = 0.0;
  if (std::all_of(v.begin(), v.end(), [](auto z) { return z == std::complex<double>{}; })) v[0] = 1.0;
  return v;
}

inline StrategicState random_strategic(const MindSpace& space, std::mt19937_64& gen) {
  return make_strategic(space, random_complex(space.dimension(), gen), true);
}

inline ProspectState random_prospect(const MindSpace& space, std::mt19937_64& gen,
                                     const std::string& name = "pi") {
  return prospect_from_amplitudes(space, name, random_sparse_complex(space.dimension(), gen));
}

inline ProspectLattice random_lattice(const MindSpace& space, std::size_t count, std::mt19937_64& gen) {
  std::vector<ProspectState> prospects;
  for (std::size_t j = 0; j < count; ++j)
    prospects.push_back(random_prospect(space, gen, "pi" + std::to_string(j + 1)));
  return ProspectLattice(std::move(prospects));
}

inline std::vector<std::size_t> pick_dims(std::mt19937_64& gen) {
  static const std::vector<std::vector<std::size_t>> shapes = {{2}, {2, 2}, {3, 2}, {2, 2, 2}, {4, 4}};
  return shapes[std::uniform_int_distribution<std::size_t>(0, shapes.size() - 1)(gen)];
}

}  // namespace qdt::testutil
