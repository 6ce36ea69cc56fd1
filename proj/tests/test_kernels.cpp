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

#include <gtest/gtest.h>
#include <omp.h>

#include <random>

#include "test_util.hpp"

using namespace qdt;
using qdt::kernels::Complex;

namespace {

struct ThreadCount {
  explicit ThreadCount(int n) : saved(omp_get_max_threads()) { omp_set_num_threads(n); }
  ~ThreadCount() { omp_set_num_threads(saved); }
  int saved;
};

bool same_bits(const kernels::ProspectTerms& x, const kernels::ProspectTerms& y) {
  return x.overlap == y.overlap && x.diagonal == y.diagonal && x.interference == y.interference;
}

}  // namespace

TEST(Kernels, match_serial_bitwise_within_one_block) {
  std::mt19937_64 gen(1);
  for (std::size_t n : {1u, 2u, 17u, 1000u, 4096u}) {
    const auto a = testutil::random_complex(n, gen);
    const auto c = testutil::random_complex(n, gen);
    EXPECT_TRUE(same_bits(kernels::prospect_terms(a, c), kernels::serial::prospect_terms(a, c)));
    EXPECT_EQ(kernels::norm_squared(c), kernels::serial::norm_squared(c));
  }
}

TEST(Kernels, match_serial_across_blocks) {
  std::mt19937_64 gen(2);
  for (std::size_t n : {4097u, 10000u, 65536u + 3}) {
    const auto a = testutil::random_complex(n, gen);
    const auto c = testutil::random_complex(n, gen);
    const auto par = kernels::prospect_terms(a, c);
    const auto ser = kernels::serial::prospect_terms(a, c);
    const double scale = static_cast<double>(n);
    EXPECT_NEAR(par.overlap.real(), ser.overlap.real(), 1e-12 * scale);
    EXPECT_NEAR(par.overlap.imag(), ser.overlap.imag(), 1e-12 * scale);
    EXPECT_NEAR(par.diagonal, ser.diagonal, 1e-12 * scale);
    EXPECT_NEAR(par.interference, ser.interference, 1e-10 * scale * scale);
  }
}

TEST(Kernels, independent_of_thread_count) {
  std::mt19937_64 gen(3);
  const std::size_t n = 50000;
  const auto a = testutil::random_complex(n, gen);
  const auto c = testutil::random_complex(n, gen);
  kernels::ProspectTerms one;
  {
    ThreadCount t(1);
    one = kernels::prospect_terms(a, c);
  }
  for (int threads : {2, 3, 8}) {
    ThreadCount t(threads);
    EXPECT_TRUE(same_bits(kernels::prospect_terms(a, c), one)) << threads << " threads";
  }
}

TEST(Kernels, lattice_terms_equal_standalone_calls) {
  std::mt19937_64 gen(4);
  const std::size_t n = 9000;
  const auto c = testutil::random_complex(n, gen);
  std::vector<std::vector<Complex>> store;
  for (int j = 0; j < 7; ++j) store.push_back(testutil::random_complex(n, gen));
  std::vector<std::span<const Complex>> views(store.begin(), store.end());
  ThreadCount t(4);
  const auto all = kernels::lattice_terms(views, c);
  ASSERT_EQ(all.size(), store.size());
  for (std::size_t j = 0; j < store.size(); ++j)
    EXPECT_TRUE(same_bits(all[j], kernels::prospect_terms(store[j], c)));
}

TEST(Kernels, decomposition_identity) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 64)(gen);
    const auto a = testutil::random_sparse_complex(n, gen);
    const auto c = testutil::random_complex(n, gen);
    const auto t = kernels::prospect_terms(a, c);
    const double scale = kernels::serial::norm_squared(a) * kernels::serial::norm_squared(c);
    EXPECT_NEAR(std::norm(t.overlap), t.diagonal + t.interference, 1e-13 * (1.0 + scale));
  }
}

TEST(Kernels, single_nonzero_term_has_no_interference) {
  std::mt19937_64 gen(6);
  for (std::size_t n : {1u, 9u, 5000u}) {
    const auto c = testutil::random_complex(n, gen);
    for (std::size_t k = 0; k < n; k += (n / 7) + 1) {
      std::vector<Complex> a(n);
      a[k] = testutil::random_complex(1, gen)[0];
      EXPECT_EQ(kernels::prospect_terms(a, c).interference, 0.0);
      EXPECT_EQ(kernels::serial::prospect_terms(a, c).interference, 0.0);
    }
  }
}
