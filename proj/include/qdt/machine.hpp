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

/**
 * @file
 * The thinking-machine pipeline: hold the strategic state, load the
 * prospects, scatter them over the strategic state (exact averages or a
 * finite number of measurement shots), let the analyzer pick the largest
 * probability, and output the winning prospect state.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qdt/decision.hpp"

namespace qdt {

struct MachineConfig {
  /// 0 means exact probabilities, no sampling.
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  bool report_raw = false;
};

struct SampledOutcome {
  std::vector<std::uint64_t> counts;
  std::vector<double> frequencies;
  /// argmax of counts, lowest index on ties.
  std::size_t empirical_choice = 0;
};

struct MachineRun {
  DecisionRecord record;
  std::optional<SampledOutcome> sampled;
  /// Analyzer choice from exact probabilities; always authoritative.
  std::size_t chosen = 0;
  ProspectState output;
};

/// Deterministic categorical sample of size `shots` from `p`.
///
/// std::mt19937_64 seeded with `seed` yields one 53-bit uniform u per
/// shot; the shot lands in the first category whose cumulative
/// probability exceeds u * sum(p). Zero-probability categories are never
/// hit. ValidationError when shots == 0, p is empty, an entry is negative
/// or non-finite, or sum(p) is off 1 by more than kInputNormTolerance.
std::vector<std::uint64_t> sample_counts(std::span<const double> p, std::uint64_t shots,
                                         std::uint64_t seed);

/// Runs every stage once. Decision-module errors propagate unchanged.
MachineRun run_pipeline(const StrategicState& s, const ProspectLattice& lattice,
                        const MachineConfig& cfg);

}  // namespace qdt
