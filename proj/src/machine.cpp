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

#include "qdt/machine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qdt/errors.hpp"

namespace qdt {

std::vector<std::uint64_t> sample_counts(std::span<const double> p, std::uint64_t shots,
                                         std::uint64_t seed) {
  if (shots == 0) throw ValidationError("sampling needs at least one shot");
  if (p.empty()) throw ValidationError("sampling needs a nonempty distribution");

  std::vector<double> cdf(p.size());
  double total = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    if (!std::isfinite(p[j]) || p[j] < 0.0)
      throw ValidationError("probability " + std::to_string(j + 1) + " is negative or non-finite");
    total += p[j];
    cdf[j] = total;
    if (p[j] > 0.0) last_positive = j;
  }
  if (std::abs(total - 1.0) > kInputNormTolerance)
    throw ValidationError("probabilities sum to " + std::to_string(total) + ", not 1");

  std::mt19937_64 gen(seed);
  constexpr double kTwoPow53 = 9007199254740992.0;
  std::vector<std::uint64_t> counts(p.size(), 0);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = static_cast<double>(gen() >> 11) / kTwoPow53 * total;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto j = std::min(static_cast<std::size_t>(it - cdf.begin()), last_positive);
    ++counts[j];
  }
  return counts;
}

namespace {

// Scattering: exact averages, plus shot statistics when requested.
std::optional<SampledOutcome> scatter(const DecisionRecord& rec, const MachineConfig& cfg) {
  if (cfg.shots == 0) return std::nullopt;
  std::vector<double> p;
  p.reserve(rec.scores.size());
  for (const auto& sc : rec.scores) p.push_back(sc.p);

  SampledOutcome out;
  out.counts = sample_counts(p, cfg.shots, cfg.seed);
  for (auto c : out.counts)
    out.frequencies.push_back(static_cast<double>(c) / static_cast<double>(cfg.shots));
  out.empirical_choice = static_cast<std::size_t>(
      std::max_element(out.counts.begin(), out.counts.end()) - out.counts.begin());
  return out;
}

}  // namespace

MachineRun run_pipeline(const StrategicState& s, const ProspectLattice& lattice,
                        const MachineConfig& cfg) {
  // The strategic state is held fixed for the whole run.
  auto record = decompose(s, lattice);
  auto sampled = scatter(record, cfg);
  const std::size_t chosen = record.optimal;
  return MachineRun{std::move(record), std::move(sampled), chosen, lattice[chosen]};
}

}  // namespace qdt
