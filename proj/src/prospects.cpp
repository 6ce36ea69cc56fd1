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

#include "qdt/prospects.hpp"

#include <cmath>

#include "qdt/errors.hpp"

namespace qdt {

ProspectState ProspectState::scaled(Complex factor) const {
  if (factor == Complex{0.0, 0.0}) throw ValidationError("prospect scale factor must be nonzero");
  Amplitudes amp(amplitudes().begin(), amplitudes().end());
  for (auto& x : amp) x *= factor;
  return ProspectState(name_, StateVector(space(), std::move(amp)), support_);
}

ProspectState prospect_from_amplitudes(const MindSpace& space, std::string name, Amplitudes amp,
                                       std::optional<Event> support) {
  if (name.empty()) throw ValidationError("prospect name must not be empty");
  for (const auto& x : amp)
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
      throw ValidationError("prospect '" + name + "' has a non-finite amplitude");
  StateVector v(space, std::move(amp));

  bool nonzero = false;
  for (const auto& x : v.amplitudes()) nonzero = nonzero || x != Complex{0.0, 0.0};
  if (!nonzero) throw ValidationError("prospect '" + name + "' is the zero vector");

  if (support) {
    if (support->dims() != space.dims())
      throw StructuralError("support of prospect '" + name + "' belongs to a different ring");
    for (std::size_t n = 0; n < v.size(); ++n)
      if (v[n] != Complex{0.0, 0.0} && !support->contains_flat(n))
        throw ValidationError("prospect '" + name + "' has a nonzero amplitude at " +
                              space.ring().label(space.ring().multi_index(n)) +
                              ", outside its declared support");
  }
  return ProspectState(std::move(name), std::move(v), std::move(support));
}

ProspectState prospect_from_support_uniform(const MindSpace& space, std::string name,
                                            const Event& event,
                                            std::optional<std::vector<Complex>> phases) {
  if (event.empty()) throw ValidationError("prospect '" + name + "' has an empty support");
  if (event.dims() != space.dims())
    throw StructuralError("support of prospect '" + name + "' belongs to a different ring");
  if (phases) {
    if (phases->size() != event.size())
      throw ValidationError("prospect '" + name + "' has " + std::to_string(phases->size()) +
                            " phases for " + std::to_string(event.size()) + " support members");
    for (const auto& ph : *phases)
      if (!(std::abs(std::abs(ph) - 1.0) <= kInputNormTolerance))
        throw ValidationError("prospect '" + name + "' has a phase of non-unit modulus");
  }

  const double weight = 1.0 / std::sqrt(static_cast<double>(event.size()));
  Amplitudes amp(space.dimension());
  const auto& members = event.flat_members();
  for (std::size_t k = 0; k < members.size(); ++k)
    amp[members[k]] = phases ? weight * (*phases)[k] : Complex{weight, 0.0};
  return prospect_from_amplitudes(space, std::move(name), std::move(amp), event);
}

Complex OperatorMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw StructuralError("operator dimensions differ");
  OperatorMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex lhs = (*this)(i, k);
      if (lhs == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) += lhs * rhs(k, j);
    }
  return out;
}

OperatorMatrix& OperatorMatrix::operator*=(Complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Complex OperatorMatrix::expectation(std::span<const Complex> v) const {
  if (v.size() != dim_) throw StructuralError("vector length differs from operator dimension");
  Complex sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < dim_; ++j) row += (*this)(i, j) * v[j];
    sum += std::conj(v[i]) * row;
  }
  return sum;
}

bool OperatorMatrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

double max_abs_diff(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim_ != b.dim_) throw StructuralError("operator dimensions differ");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data_.size(); ++i) m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
  return m;
}

OperatorMatrix operator_matrix(const ProspectState& prospect) {
  const auto a = prospect.amplitudes();
  OperatorMatrix p(a.size());
  for (std::size_t m = 0; m < a.size(); ++m)
    for (std::size_t n = 0; n < a.size(); ++n) p(m, n) = a[m] * std::conj(a[n]);
  return p;
}

bool is_projector(const ProspectState& prospect, double tol) {
  return std::abs(prospect.norm_squared() - 1.0) <= tol;
}

}  // namespace qdt
