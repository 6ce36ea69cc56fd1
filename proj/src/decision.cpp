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

#include "qdt/decision.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "qdt/errors.hpp"
#include "qdt/kernels.hpp"

namespace qdt {

ProspectLattice::ProspectLattice(std::vector<ProspectState> prospects)
    : prospects_(std::move(prospects)) {
  if (prospects_.empty()) throw ValidationError("prospect lattice must not be empty");
  std::unordered_set<std::string> names;
  for (const auto& p : prospects_) {
    if (!(p.space() == prospects_.front().space()))
      throw StructuralError("prospect '" + p.name() + "' lives in a different mind space");
    if (!names.insert(p.name()).second)
      throw ValidationError("duplicate prospect name '" + p.name() + "'");
  }
}

namespace {

void require_same_space(const StrategicState& s, const MindSpace& space) {
  if (!(s.space() == space))
    throw StructuralError("strategic state and prospects live in different mind spaces");
}

kernels::ProspectTerms terms(const StrategicState& s, const ProspectState& prospect) {
  require_same_space(s, prospect.space());
  return kernels::prospect_terms(prospect.amplitudes(), s.amplitudes());
}

}  // namespace

double raw_probability(const StrategicState& s, const ProspectState& prospect) {
  return std::norm(terms(s, prospect).overlap);
}

double utility_factor_raw(const StrategicState& s, const ProspectState& prospect) {
  require_same_space(s, prospect.space());
  return kernels::diagonal(prospect.amplitudes(), s.amplitudes());
}

double attraction_factor_raw(const StrategicState& s, const ProspectState& prospect) {
  return terms(s, prospect).interference;
}

Ranking rank_by_probability(std::span<const double> p) {
  Ranking r;
  r.order.resize(p.size());
  std::iota(r.order.begin(), r.order.end(), std::size_t{0});
  std::stable_sort(r.order.begin(), r.order.end(),
                   [&](std::size_t a, std::size_t b) { return p[a] > p[b]; });

  // Group runs indifferent to their leader and list each group by index.
  for (std::size_t lo = 0; lo < r.order.size();) {
    const double leader = p[r.order[lo]];
    std::size_t hi = lo + 1;
    while (hi < r.order.size() && leader - p[r.order[hi]] <= kIndifferenceTolerance) ++hi;
    std::sort(r.order.begin() + static_cast<std::ptrdiff_t>(lo),
              r.order.begin() + static_cast<std::ptrdiff_t>(hi));
    if (lo == 0) r.ties.assign(r.order.begin(), r.order.begin() + static_cast<std::ptrdiff_t>(hi));
    lo = hi;
  }
  return r;
}

DecisionRecord decompose(const StrategicState& s, const ProspectLattice& lattice) {
  require_same_space(s, lattice.space());

  std::vector<std::span<const Complex>> amps;
  amps.reserve(lattice.size());
  for (const auto& prospect : lattice) amps.push_back(prospect.amplitudes());
  const auto terms = kernels::lattice_terms(amps, s.amplitudes());

  DecisionRecord rec;
  rec.scores.resize(lattice.size());
  double sum_p = 0.0;
  double sum_p0 = 0.0;
  for (std::size_t j = 0; j < lattice.size(); ++j) {
    rec.names.push_back(lattice[j].name());
    auto& sc = rec.scores[j];
    sc.raw_p = std::norm(terms[j].overlap);
    sc.raw_p0 = terms[j].diagonal;
    sc.raw_q = terms[j].interference;
    sum_p += sc.raw_p;
    sum_p0 += sc.raw_p0;
  }
  if (!(sum_p > 0.0))
    throw DegenerateLatticeError("strategic state is orthogonal to every prospect in the lattice");
  if (!(sum_p0 > 0.0))
    throw DegenerateLatticeError("utility factors vanish for every prospect in the lattice");

  std::vector<double> p(lattice.size());
  for (std::size_t j = 0; j < lattice.size(); ++j) {
    auto& sc = rec.scores[j];
    sc.p = sc.raw_p / sum_p;
    sc.p0 = sc.raw_p0 / sum_p0;
    sc.q = sc.p - sc.p0;
    p[j] = sc.p;
  }

  auto ranking = rank_by_probability(p);
  rec.ranking = std::move(ranking.order);
  rec.ties = std::move(ranking.ties);
  rec.optimal = rec.ranking.front();
  return rec;
}

ProspectBreakdown explain_prospect(const StrategicState& s, const ProspectState& prospect) {
  require_same_space(s, prospect.space());
  const auto c = s.amplitudes();
  const auto a = prospect.amplitudes();

  std::vector<std::size_t> active;
  for (std::size_t n = 0; n < a.size(); ++n)
    if (c[n] != Complex{0.0, 0.0} && a[n] != Complex{0.0, 0.0}) active.push_back(n);

  ProspectBreakdown out;
  for (auto n : active) out.diagonal.emplace_back(n, std::norm(c[n]) * std::norm(a[n]));
  for (auto m : active)
    for (auto n : active)
      if (m != n) out.off_diagonal.push_back({m, n, std::conj(c[m]) * c[n] * a[m] * std::conj(a[n])});
  return out;
}

Ordering order_prospects(const DecisionRecord& record) {
  Ordering out;
  out.ranking = record.ranking;
  for (std::size_t k = 0; k + 1 < out.ranking.size(); ++k) {
    const double hi = record.scores[out.ranking[k]].p;
    const double lo = record.scores[out.ranking[k + 1]].p;
    out.relations.push_back(hi - lo > kIndifferenceTolerance ? Preference::kPreferred
                                                             : Preference::kIndifferent);
  }
  return out;
}

std::string to_string(const Ordering& ordering, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t k = 0; k < ordering.ranking.size(); ++k) {
    if (k) out += ordering.relations[k - 1] == Preference::kPreferred ? " > " : " = ";
    out += names.at(ordering.ranking[k]);
  }
  return out;
}

}  // namespace qdt
