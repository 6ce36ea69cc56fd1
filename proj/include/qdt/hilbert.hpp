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
 * Mode spaces, the mind space (their tensor product) and state vectors.
 *
 * Amplitudes are stored densely, one complex<double> per elementary
 * prospect, indexed by the flat index of ActionRing.
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qdt/action_algebra.hpp"

namespace qdt {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Slack for identities that hold exactly in real arithmetic.
inline constexpr double kExactTolerance = 1e-12;
/// Slack allowed on user-supplied unit-norm vectors.
inline constexpr double kInputNormTolerance = 1e-9;

/// Tensor product of the per-action mode spaces.
class MindSpace {
 public:
  explicit MindSpace(const ActionRing& ring) : ring_(ring) {}

  const ActionRing& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& dims() const noexcept { return ring_.dims(); }
  std::size_t dimension() const noexcept { return ring_.grid_size(); }

  friend bool operator==(const MindSpace& a, const MindSpace& b) { return a.dims() == b.dims(); }

 private:
  ActionRing ring_;
};

class StateVector {
 public:
  /// The zero vector of `space`.
  explicit StateVector(MindSpace space);
  /// ValidationError when `amp.size()` differs from the space dimension.
  StateVector(MindSpace space, Amplitudes amp);

  const MindSpace& space() const noexcept { return space_; }
  std::span<const Complex> amplitudes() const noexcept { return amp_; }
  std::size_t size() const noexcept { return amp_.size(); }
  Complex operator[](std::size_t i) const { return amp_[i]; }

  double norm_squared() const;
  double norm() const;

 private:
  MindSpace space_;
  Amplitudes amp_;
};

/// The one-hot vector |e_n>.
StateVector basic_state(const MindSpace& space, const MultiIndex& n);

/// Kronecker product of one mode vector per action, in flat-index order.
StateVector tensor(const MindSpace& space, std::span<const Amplitudes> mode_vectors);

/// <a|b> = sum_n conj(a_n) b_n. StructuralError on a space mismatch.
Complex inner(const StateVector& a, const StateVector& b);

/// Unit-norm reference state of the decision maker.
class StrategicState {
 public:
  const StateVector& vector() const noexcept { return vec_; }
  const MindSpace& space() const noexcept { return vec_.space(); }
  std::span<const Complex> amplitudes() const noexcept { return vec_.amplitudes(); }
  std::size_t size() const noexcept { return vec_.size(); }

 private:
  explicit StrategicState(StateVector v) : vec_(std::move(v)) {}
  friend StrategicState make_strategic(const MindSpace&, Amplitudes, bool);

  StateVector vec_;
};

/// With `normalize`, rescales `c` to unit norm; otherwise requires
/// |‖c‖ - 1| <= kInputNormTolerance and keeps `c` as given.
/// ValidationError for the zero vector, non-finite entries, a wrong
/// length, or a non-unit norm without `normalize`.
StrategicState make_strategic(const MindSpace& space, Amplitudes c, bool normalize);

/// Deterministic random strategic state.
///
/// Uses std::mt19937_64 seeded with `seed`. Each amplitude consumes two
/// 53-bit uniforms and one Box-Muller transform, whose cosine and sine
/// branches give the real and imaginary parts (independent N(0, 1)). The
/// sequence depends only on the Mersenne Twister output and libm, not on
/// the standard library's distribution classes. The vector is then
/// normalized.
StrategicState random_state(const MindSpace& space, std::uint64_t seed);

/// `n` independent standard complex normals from the same generator
/// construction as random_state, unnormalized.
Amplitudes gaussian_amplitudes(std::size_t n, std::uint64_t seed);

}  // namespace qdt
