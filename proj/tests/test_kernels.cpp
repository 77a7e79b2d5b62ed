// Copyright 2026 The qrot Authors
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

#include <gtest/gtest.h>

#include <cstring>

#include "qrot/errors.hpp"
#include "qrot/kernels.hpp"
#include "support/oracles.hpp"

namespace qrot {
namespace {

using testing::Rng;

kernels::Mat2 random_mat2(Rng& rng) {
  const ComplexMatrix m = testing::random_matrix(rng, 2, 2);
  return kernels::Mat2::from(m);
}

void apply_reference(std::vector<Complex>& a, unsigned target, std::uint64_t mask, std::uint64_t value,
                     const kernels::Mat2& m) {
  const std::size_t bit = std::size_t{1} << target;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((i & bit) || (i & mask) != value) continue;
    const Complex x0 = a[i], x1 = a[i | bit];
    a[i] = m.m00 * x0 + m.m01 * x1;
    a[i | bit] = m.m10 * x0 + m.m11 * x1;
  }
}

struct Case {
  unsigned width, target;
  std::uint64_t mask, value;
};

std::vector<Case> random_cases(Rng& rng, int count) {
  std::vector<Case> cases;
  for (int t = 0; t < count; ++t) {
    const unsigned width = 1 + static_cast<unsigned>(rng() % 10);
    const unsigned target = static_cast<unsigned>(rng() % width);
    std::uint64_t mask = rng() & ((std::uint64_t{1} << width) - 1);
    mask &= ~(std::uint64_t{1} << target);
    cases.push_back({width, target, mask, rng() & mask});
  }
  return cases;
}

TEST(Kernels, ScalarMatchesReference) {
  Rng rng(41);
  for (const Case& c : random_cases(rng, 300)) {
    std::vector<Complex> a = testing::random_amplitudes(rng, std::size_t{1} << c.width);
    std::vector<Complex> ref = a;
    const kernels::Mat2 m = random_mat2(rng);
    kernels::apply_1q_scalar(a, c.target, c.mask, c.value, m);
    apply_reference(ref, c.target, c.mask, c.value, m);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LE(std::abs(a[i] - ref[i]), 1e-14);
  }
}

#if QROT_HAVE_AVX2
TEST(Kernels, Avx2BitwiseEqualsScalar) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not supported by this CPU";
  Rng rng(42);
  for (const Case& c : random_cases(rng, 500)) {
    const std::vector<Complex> start = testing::random_amplitudes(rng, std::size_t{1} << c.width);
    std::vector<Complex> s = start, v = start;
    const kernels::Mat2 m = random_mat2(rng);
    kernels::apply_1q_scalar(s, c.target, c.mask, c.value, m);
    kernels::apply_1q_avx2(v, c.target, c.mask, c.value, m);
    ASSERT_EQ(0, std::memcmp(s.data(), v.data(), s.size() * sizeof(Complex)))
        << "width " << c.width << " target " << c.target << " mask " << c.mask;

    std::vector<double> ps(s.size()), pv(s.size());
    kernels::probabilities_scalar(s, ps);
    kernels::probabilities_avx2(s, pv);
    ASSERT_EQ(0, std::memcmp(ps.data(), pv.data(), ps.size() * sizeof(double)));
  }
}
#endif

TEST(Kernels, Probabilities) {
  const std::vector<Complex> a = {Complex(0.6, 0), Complex(0, 0.8)};
  std::vector<double> p(2);
  kernels::probabilities(a, p);
  EXPECT_NEAR(p[0], 0.36, 1e-15);
  EXPECT_NEAR(p[1], 0.64, 1e-15);
  std::vector<double> wrong(3);
  EXPECT_ANY_THROW(kernels::probabilities(a, wrong));
}

TEST(Kernels, DispatchSelection) {
  kernels::set_isa(kernels::Isa::Scalar);
  EXPECT_EQ(kernels::active_isa(), kernels::Isa::Scalar);
  if (kernels::avx2_available()) {
    kernels::set_isa(kernels::Isa::Avx2);
    EXPECT_EQ(kernels::active_isa(), kernels::Isa::Avx2);
  } else {
    EXPECT_THROW(kernels::set_isa(kernels::Isa::Avx2), DomainError);
  }
  kernels::reset_isa();
  EXPECT_EQ(kernels::to_string(kernels::Isa::Scalar), "scalar");
}

}  // namespace
}  // namespace qrot
