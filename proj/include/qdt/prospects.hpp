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
 * Prospect states and their rank-1 operators P = |pi><pi|.
 *
 * Prospect states are neither normalized nor mutually orthogonal, so in
 * general P^2 = <pi|pi> P and P is not a projector. Production code works
 * with amplitudes only; OperatorMatrix is materialized for inspection and
 * tests.
 */

#include <optional>
#include <string>
#include <vector>

#include "qdt/action_algebra.hpp"
#include "qdt/hilbert.hpp"

namespace qdt {

class ProspectState {
 public:
  const std::string& name() const noexcept { return name_; }
  const StateVector& vector() const noexcept { return vec_; }
  const MindSpace& space() const noexcept { return vec_.space(); }
  std::span<const Complex> amplitudes() const noexcept { return vec_.amplitudes(); }
  const std::optional<Event>& support() const noexcept { return support_; }
  /// <pi|pi>
  double norm_squared() const { return vec_.norm_squared(); }

  /// Same prospect with every amplitude multiplied by `factor`.
  /// ValidationError if `factor` is zero.
  ProspectState scaled(Complex factor) const;

 private:
  ProspectState(std::string name, StateVector v, std::optional<Event> support)
      : name_(std::move(name)), vec_(std::move(v)), support_(std::move(support)) {}

  friend ProspectState prospect_from_amplitudes(const MindSpace&, std::string, Amplitudes,
                                                std::optional<Event>);

  std::string name_;
  StateVector vec_;
  std::optional<Event> support_;
};

/// Amplitudes are stored verbatim. ValidationError for an empty name, a
/// wrong length, non-finite entries, the zero vector, or a nonzero
/// amplitude outside `support`; StructuralError if `support` belongs to a
/// different ring.
ProspectState prospect_from_amplitudes(const MindSpace& space, std::string name, Amplitudes amp,
                                       std::optional<Event> support = std::nullopt);

/// Equal-weight superposition over `event`: amplitude phase_k/sqrt(|event|)
/// on the k-th member (in flat-index order), zero elsewhere. Phases default
/// to +1 and must have unit modulus within kInputNormTolerance.
ProspectState prospect_from_support_uniform(const MindSpace& space, std::string name,
                                            const Event& event,
                                            std::optional<std::vector<Complex>> phases = std::nullopt);

/// Dense row-major square complex matrix.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  Complex operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }
  Complex& operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }

  Complex trace() const;
  OperatorMatrix operator*(const OperatorMatrix& rhs) const;
  OperatorMatrix& operator*=(Complex s);
  /// <v|M|v> for a vector of matching length.
  Complex expectation(std::span<const Complex> v) const;
  bool is_hermitian(double tol) const;

  friend double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  std::size_t dim_;
  std::vector<Complex> data_;
};

/// |pi><pi|: entry (m, n) = a_m conj(a_n).
OperatorMatrix operator_matrix(const ProspectState& prospect);

/// True iff P is idempotent within `tol`, decided through |<pi|pi> - 1| <= tol.
bool is_projector(const ProspectState& prospect, double tol = kExactTolerance);

}  // namespace qdt
