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
 * Amplitude-level reductions behind prospect probabilities.
 *
 * For a strategic state c and prospect amplitudes a over the same basis,
 * with w_n = c_n * conj(a_n):
 *
 *   overlap      W  = sum_n w_n                     (<pi|s>)
 *   diagonal     D  = sum_n |c_n|^2 |a_n|^2         (utility factor)
 *   interference Q  = sum_n Re(conj(w_n) (W - w_n)) (attraction factor)
 *
 * so that |W|^2 = D + Q. Q is evaluated directly from its off-diagonal
 * form rather than as |W|^2 - D; when only one w_n is nonzero, W - w_n is
 * exactly zero and so is Q.
 *
 * Two implementations are kept. `serial::` is a single left-to-right loop
 * and serves as the reference in tests. The default kernels split the
 * range into fixed blocks of kBlockSize, reduce each block with the
 * serial loop in parallel, and add the block partials in block order.
 * The result is therefore independent of the number of OpenMP threads,
 * and bit-identical to `serial::` whenever n <= kBlockSize.
 */

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qdt::kernels {

using Complex = std::complex<double>;

inline constexpr std::size_t kBlockSize = 4096;

struct ProspectTerms {
  Complex overlap;      // <pi|s>
  double diagonal;      // sum |c|^2 |a|^2
  double interference;  // sum_{m != n} conj(c_m) c_n a_m conj(a_n)
};

namespace serial {
double norm_squared(std::span<const Complex> v);
Complex overlap(std::span<const Complex> a, std::span<const Complex> c);
double diagonal(std::span<const Complex> a, std::span<const Complex> c);
double interference(std::span<const Complex> a, std::span<const Complex> c, Complex overlap);
ProspectTerms prospect_terms(std::span<const Complex> a, std::span<const Complex> c);
}  // namespace serial

double norm_squared(std::span<const Complex> v);
Complex overlap(std::span<const Complex> a, std::span<const Complex> c);
double diagonal(std::span<const Complex> a, std::span<const Complex> c);
double interference(std::span<const Complex> a, std::span<const Complex> c, Complex overlap);
ProspectTerms prospect_terms(std::span<const Complex> a, std::span<const Complex> c);

/// prospect_terms for every prospect against one strategic state. Runs
/// prospects in parallel; each entry equals prospect_terms(prospects[j], c)
/// bit for bit.
std::vector<ProspectTerms> lattice_terms(std::span<const std::span<const Complex>> prospects,
                                         std::span<const Complex> c);

/// Threads OpenMP would use for a parallel region here.
int max_threads();

}  // namespace qdt::kernels
