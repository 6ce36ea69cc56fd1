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

// Brute-force dense-matrix evaluation of prospect probabilities, utility
// factors and attraction factors, written directly from their operator
// definitions:
//
//   p   = <s| P |s>
//   p0  = sum_n     <s| P(e_n) P P(e_n) |s>
//   q   = sum_{m≠n} <s| P(e_m) P P(e_n) |s>
//
// with P = |a><a| and P(e_n) = |e_n><e_n| built as explicit matrices.
// Shares no code with the engine.

#include <complex>
#include <cstddef>
#include <vector>

namespace qdt::oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<Vec>;

inline Mat outer(const Vec& a) {
  Mat m(a.size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) m[i][j] = a[i] * std::conj(a[j]);
  return m;
}

inline Mat basis_projector(std::size_t dim, std::size_t n) {
  Mat m(dim, Vec(dim));
  m[n][n] = 1.0;
  return m;
}

inline Mat matmul(const Mat& x, const Mat& y) {
  const std::size_t d = x.size();
  Mat out(d, Vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) out[i][j] += x[i][k] * y[k][j];
  return out;
}

inline Vec matvec(const Mat& m, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

/// <u|M|v>
inline C sandwich(const Vec& u, const Mat& m, const Vec& v) {
  const Vec mv = matvec(m, v);
  C sum = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) sum += std::conj(u[i]) * mv[i];
  return sum;
}

struct Terms {
  double p;
  double p0;
  double q;
};

/// O(dim^3): P(e_n)|s> is formed by an explicit projector matvec, then
/// each <P(e_m) s| P |P(e_n) s> is evaluated with the dense P.
inline Terms evaluate(const Vec& s, const Vec& a) {
  const std::size_t d = s.size();
  const Mat p = outer(a);
  std::vector<Vec> projected(d);
  std::vector<Vec> p_projected(d);
  for (std::size_t n = 0; n < d; ++n) {
    projected[n] = matvec(basis_projector(d, n), s);
    p_projected[n] = matvec(p, projected[n]);
  }
  Terms t{sandwich(s, p, s).real(), 0.0, 0.0};
  C off = 0.0;
  for (std::size_t m = 0; m < d; ++m)
    for (std::size_t n = 0; n < d; ++n) {
      C v = 0.0;
      for (std::size_t i = 0; i < d; ++i) v += std::conj(projected[m][i]) * p_projected[n][i];
      if (m == n) {
        t.p0 += v.real();
      } else {
        off += v;
      }
    }
  t.q = off.real();
  return t;
}

/// Literal triple product <s|P(e_m) P P(e_n)|s> with three dense matrix
/// products; only for tiny dimensions.
inline C triple_product(const Vec& s, const Vec& a, std::size_t m, std::size_t n) {
  const std::size_t d = s.size();
  const Mat op = matmul(matmul(basis_projector(d, m), outer(a)), basis_projector(d, n));
  return sandwich(s, op, s);
}

}  // namespace qdt::oracle
