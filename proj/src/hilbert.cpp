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

#include "qdt/hilbert.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "qdt/errors.hpp"
#include "qdt/kernels.hpp"

namespace qdt {

StateVector::StateVector(MindSpace space) : space_(std::move(space)) {
  amp_.assign(space_.dimension(), Complex{0.0, 0.0});
}

StateVector::StateVector(MindSpace space, Amplitudes amp)
    : space_(std::move(space)), amp_(std::move(amp)) {
  if (amp_.size() != space_.dimension())
    throw ValidationError("expected " + std::to_string(space_.dimension()) + " amplitudes, got " +
                          std::to_string(amp_.size()));
}

double StateVector::norm_squared() const { return kernels::norm_squared(amp_); }

double StateVector::norm() const { return std::sqrt(norm_squared()); }

StateVector basic_state(const MindSpace& space, const MultiIndex& n) {
  Amplitudes amp(space.dimension());
  amp[space.ring().flat_index(n)] = 1.0;
  return StateVector(space, std::move(amp));
}

StateVector tensor(const MindSpace& space, std::span<const Amplitudes> mode_vectors) {
  const auto& dims = space.dims();
  if (mode_vectors.size() != dims.size())
    throw ValidationError("expected one mode vector per action (" + std::to_string(dims.size()) +
                          "), got " + std::to_string(mode_vectors.size()));
  for (std::size_t i = 0; i < dims.size(); ++i)
    if (mode_vectors[i].size() != dims[i])
      throw ValidationError("mode vector " + std::to_string(i + 1) + " has length " +
                            std::to_string(mode_vectors[i].size()) + ", expected " +
                            std::to_string(dims[i]));

  // Grow the product left to right so the first factor ends up slowest.
  Amplitudes out{Complex{1.0, 0.0}};
  for (const auto& factor : mode_vectors) {
    Amplitudes next;
    next.reserve(out.size() * factor.size());
    for (const auto& x : out)
      for (const auto& y : factor) next.push_back(x * y);
    out = std::move(next);
  }
  return StateVector(space, std::move(out));
}

Complex inner(const StateVector& a, const StateVector& b) {
  if (!(a.space() == b.space())) throw StructuralError("state vectors live in different mind spaces");
  // overlap(x, y) = sum y_n conj(x_n)
  return kernels::overlap(a.amplitudes(), b.amplitudes());
}

StrategicState make_strategic(const MindSpace& space, Amplitudes c, bool normalize) {
  for (const auto& x : c)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw ValidationError("strategic state has a non-finite amplitude");
  StateVector v(space, std::move(c));
  const double norm = v.norm();
  if (norm == 0.0) throw ValidationError("strategic state must not be the zero vector");
  if (!normalize) {
    if (std::abs(norm - 1.0) > kInputNormTolerance)
      throw ValidationError("strategic state norm is " + std::to_string(norm) +
                            "; expected 1 (or enable normalization)");
    return StrategicState(std::move(v));
  }
  Amplitudes scaled(v.amplitudes().begin(), v.amplitudes().end());
  for (auto& x : scaled) x /= norm;
  return StrategicState(StateVector(space, std::move(scaled)));
}

Amplitudes gaussian_amplitudes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  constexpr double kTwoPow53 = 9007199254740992.0;
  // (0, 1] for the logarithm, [0, 1) for the angle.
  auto open_unit = [&] { return static_cast<double>((gen() >> 11) + 1) / kTwoPow53; };
  auto half_open_unit = [&] { return static_cast<double>(gen() >> 11) / kTwoPow53; };

  Amplitudes out(n);
  for (auto& x : out) {
    const double r = std::sqrt(-2.0 * std::log(open_unit()));
    const double theta = 2.0 * std::numbers::pi * half_open_unit();
    x = Complex{r * std::cos(theta), r * std::sin(theta)};
  }
  return out;
}

StrategicState random_state(const MindSpace& space, std::uint64_t seed) {
  return make_strategic(space, gaussian_amplitudes(space.dimension(), seed), true);
}

}  // namespace qdt
