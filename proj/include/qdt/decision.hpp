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
 * Prospect probabilities and their split into utility and attraction
 * factors.
 *
 * For strategic amplitudes c and prospect amplitudes a:
 *
 *   raw_p  = <s|P(pi)|s>                        = |sum_n conj(a_n) c_n|^2
 *   raw_p0 = sum_n <s|P(e_n) P(pi) P(e_n)|s>     = sum_n |c_n|^2 |a_n|^2
 *   raw_q  = sum_{m!=n} <s|P(e_m) P(pi) P(e_n)|s> = sum_{m!=n} conj(c_m) c_n a_m conj(a_n)
 *
 * and raw_p = raw_p0 + raw_q holds without any normalization. Across a
 * lattice, p and p0 are each divided by their lattice sum and q = p - p0,
 * which makes the attraction factors sum to zero.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qdt/hilbert.hpp"
#include "qdt/prospects.hpp"

namespace qdt {

/// Two probabilities closer than this are indifferent.
inline constexpr double kIndifferenceTolerance = 1e-12;

/// Ordered, nonempty set of prospects over one mind space.
class ProspectLattice {
 public:
  /// ValidationError when empty or when names repeat; StructuralError when
  /// the prospects live in different spaces.
  explicit ProspectLattice(std::vector<ProspectState> prospects);

  const MindSpace& space() const noexcept { return prospects_.front().space(); }
  std::size_t size() const noexcept { return prospects_.size(); }
  const ProspectState& operator[](std::size_t j) const { return prospects_[j]; }
  const std::vector<ProspectState>& prospects() const noexcept { return prospects_; }

  auto begin() const noexcept { return prospects_.begin(); }
  auto end() const noexcept { return prospects_.end(); }

 private:
  std::vector<ProspectState> prospects_;
};

double raw_probability(const StrategicState& s, const ProspectState& prospect);
double utility_factor_raw(const StrategicState& s, const ProspectState& prospect);
double attraction_factor_raw(const StrategicState& s, const ProspectState& prospect);

struct ProspectScores {
  double raw_p = 0.0;
  double raw_p0 = 0.0;
  double raw_q = 0.0;
  double p = 0.0;
  double p0 = 0.0;
  double q = 0.0;
};

struct DecisionRecord {
  std::vector<std::string> names;
  std::vector<ProspectScores> scores;
  /// Prospect indices by descending p; indifferent prospects by index.
  std::vector<std::size_t> ranking;
  /// Every prospect indifferent to the best one, ascending.
  std::vector<std::size_t> ties;
  /// ranking.front(), the lowest index among `ties`.
  std::size_t optimal = 0;
};

/// Ranking and tie set for a probability vector (see DecisionRecord).
struct Ranking {
  std::vector<std::size_t> order;
  std::vector<std::size_t> ties;
};
Ranking rank_by_probability(std::span<const double> p);

/// Throws DegenerateLatticeError when sum raw_p or sum raw_p0 is zero;
/// StructuralError when the lattice lives in a different space.
DecisionRecord decompose(const StrategicState& s, const ProspectLattice& lattice);

/// One term conj(c_m) c_n a_m conj(a_n) of the attraction factor.
struct InterferenceTerm {
  std::size_t m = 0;
  std::size_t n = 0;
  Complex value;
};

struct ProspectBreakdown {
  /// (n, |c_n|^2 |a_n|^2) for every nonzero diagonal term, by n.
  std::vector<std::pair<std::size_t, double>> diagonal;
  /// Every nonzero off-diagonal term, by (m, n). Terms (m, n) and (n, m)
  /// are complex conjugates, so only their real parts survive the sum.
  std::vector<InterferenceTerm> off_diagonal;
};

/// Term-by-term expansion of utility and attraction factors. Quadratic in
/// the number of basis states where both c and a are nonzero.
ProspectBreakdown explain_prospect(const StrategicState& s, const ProspectState& prospect);

enum class Preference { kPreferred, kIndifferent };

struct Ordering {
  std::vector<std::size_t> ranking;
  /// relations[k] relates ranking[k] to ranking[k + 1].
  std::vector<Preference> relations;
};

Ordering order_prospects(const DecisionRecord& record);

/// "pi2 > pi3 = pi1"
std::string to_string(const Ordering& ordering, const std::vector<std::string>& names);

}  // namespace qdt
