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

#include "qdt/kernels.hpp"

#include <omp.h>

#include <cassert>

namespace qdt::kernels {

namespace serial {

double norm_squared(std::span<const Complex> v) {
  double sum = 0.0;
  for (const auto& x : v) sum += std::norm(x);
  return sum;
}

Complex overlap(std::span<const Complex> a, std::span<const Complex> c) {
  assert(a.size() == c.size());
  Complex sum = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) sum += c[n] * std::conj(a[n]);
  return sum;
}

double diagonal(std::span<const Complex> a, std::span<const Complex> c) {
  assert(a.size() == c.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) sum += std::norm(c[n]) * std::norm(a[n]);
  return sum;
}

double interference(std::span<const Complex> a, std::span<const Complex> c, Complex overlap) {
  assert(a.size() == c.size());
  double sum = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const Complex w = c[n] * std::conj(a[n]);
    sum += (std::conj(w) * (overlap - w)).real();
  }
  return sum;
}

ProspectTerms prospect_terms(std::span<const Complex> a, std::span<const Complex> c) {
  const Complex w = overlap(a, c);
  return {w, diagonal(a, c), interference(a, c, w)};
}

}  // namespace serial

namespace {

std::size_t num_blocks(std::size_t n) { return (n + kBlockSize - 1) / kBlockSize; }

// Reduces `block_sum(lo, hi)` over fixed blocks in parallel, then adds the
// partials sequentially in block order.
template <typename T, typename BlockFn>
T blocked_reduce(std::size_t n, BlockFn block_sum) {
  if (n <= kBlockSize) return block_sum(0, n);
  const std::size_t blocks = num_blocks(n);
  std::vector<T> partial(blocks);
  const auto count = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
  for (std::ptrdiff_t b = 0; b < count; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kBlockSize;
    const std::size_t hi = std::min(n, lo + kBlockSize);
    partial[static_cast<std::size_t>(b)] = block_sum(lo, hi);
  }
  T sum{};
  for (const auto& p : partial) sum += p;
  return sum;
}

}  // namespace

double norm_squared(std::span<const Complex> v) {
  return blocked_reduce<double>(v.size(), [&](std::size_t lo, std::size_t hi) {
    return serial::norm_squared(v.subspan(lo, hi - lo));
  });
}

Complex overlap(std::span<const Complex> a, std::span<const Complex> c) {
  assert(a.size() == c.size());
  return blocked_reduce<Complex>(a.size(), [&](std::size_t lo, std::size_t hi) {
    return serial::overlap(a.subspan(lo, hi - lo), c.subspan(lo, hi - lo));
  });
}

double diagonal(std::span<const Complex> a, std::span<const Complex> c) {
  assert(a.size() == c.size());
  return blocked_reduce<double>(a.size(), [&](std::size_t lo, std::size_t hi) {
    return serial::diagonal(a.subspan(lo, hi - lo), c.subspan(lo, hi - lo));
  });
}

double interference(std::span<const Complex> a, std::span<const Complex> c, Complex overlap) {
  assert(a.size() == c.size());
  return blocked_reduce<double>(a.size(), [&](std::size_t lo, std::size_t hi) {
    return serial::interference(a.subspan(lo, hi - lo), c.subspan(lo, hi - lo), overlap);
  });
}

ProspectTerms prospect_terms(std::span<const Complex> a, std::span<const Complex> c) {
  const Complex w = overlap(a, c);
  return {w, diagonal(a, c), interference(a, c, w)};
}

std::vector<ProspectTerms> lattice_terms(std::span<const std::span<const Complex>> prospects,
                                         std::span<const Complex> c) {
  std::vector<ProspectTerms> out(prospects.size());
  const auto count = static_cast<std::ptrdiff_t>(prospects.size());
  // Inner reductions see omp_in_parallel() and stay on their thread; their
  // blocking is unchanged, so each entry is the same as a standalone call.
#pragma omp parallel for schedule(dynamic) if (count > 1)
  for (std::ptrdiff_t j = 0; j < count; ++j)
    out[static_cast<std::size_t>(j)] = prospect_terms(prospects[static_cast<std::size_t>(j)], c);
  return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace qdt::kernels
