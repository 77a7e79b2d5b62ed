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

#include <immintrin.h>

#include <cstddef>

#include "qrot/kernels.hpp"

namespace qrot::kernels {

namespace {

// (re, im) pairs packed two to a register: [re0, im0, re1, im1].
inline __m256d cmul_256(__m256d m_re, __m256d m_im, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(m_re, v), _mm256_mul_pd(m_im, swapped));
}

inline __m128d cmul_128(__m128d m_re, __m128d m_im, __m128d v) {
  const __m128d swapped = _mm_shuffle_pd(v, v, 0b01);
  return _mm_addsub_pd(_mm_mul_pd(m_re, v), _mm_mul_pd(m_im, swapped));
}

inline double* raw(std::span<Complex> amps, std::size_t i) {
  return reinterpret_cast<double*>(amps.data() + i);
}

void apply_pairs_128(std::span<Complex> amps, std::size_t bit, std::uint64_t ctrl_mask,
                     std::uint64_t ctrl_value, const Mat2& m) {
  const __m128d m00r = _mm_set1_pd(m.m00.real()), m00i = _mm_set1_pd(m.m00.imag());
  const __m128d m01r = _mm_set1_pd(m.m01.real()), m01i = _mm_set1_pd(m.m01.imag());
  const __m128d m10r = _mm_set1_pd(m.m10.real()), m10i = _mm_set1_pd(m.m10.imag());
  const __m128d m11r = _mm_set1_pd(m.m11.real()), m11i = _mm_set1_pd(m.m11.imag());
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      const std::size_t i0 = base + off;
      if ((i0 & ctrl_mask) != ctrl_value) continue;
      const std::size_t i1 = i0 | bit;
      const __m128d a0 = _mm_loadu_pd(raw(amps, i0));
      const __m128d a1 = _mm_loadu_pd(raw(amps, i1));
      _mm_storeu_pd(raw(amps, i0), _mm_add_pd(cmul_128(m00r, m00i, a0), cmul_128(m01r, m01i, a1)));
      _mm_storeu_pd(raw(amps, i1), _mm_add_pd(cmul_128(m10r, m10i, a0), cmul_128(m11r, m11i, a1)));
    }
  }
}

}  // namespace

void apply_1q_avx2(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
                   std::uint64_t ctrl_value, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << target;
  // Two neighbouring amplitudes share a control pattern only when qubit 0 is
  // neither the target nor a control.
  if (target == 0 || (ctrl_mask & 1U) != 0) {
    apply_pairs_128(amps, bit, ctrl_mask, ctrl_value, m);
    return;
  }
  const __m256d m00r = _mm256_set1_pd(m.m00.real()), m00i = _mm256_set1_pd(m.m00.imag());
  const __m256d m01r = _mm256_set1_pd(m.m01.real()), m01i = _mm256_set1_pd(m.m01.imag());
  const __m256d m10r = _mm256_set1_pd(m.m10.real()), m10i = _mm256_set1_pd(m.m10.imag());
  const __m256d m11r = _mm256_set1_pd(m.m11.real()), m11i = _mm256_set1_pd(m.m11.imag());
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; off += 2) {
      const std::size_t i0 = base + off;
      if ((i0 & ctrl_mask) != ctrl_value) continue;
      const std::size_t i1 = i0 | bit;
      const __m256d a0 = _mm256_loadu_pd(raw(amps, i0));
      const __m256d a1 = _mm256_loadu_pd(raw(amps, i1));
      _mm256_storeu_pd(raw(amps, i0),
                       _mm256_add_pd(cmul_256(m00r, m00i, a0), cmul_256(m01r, m01i, a1)));
      _mm256_storeu_pd(raw(amps, i1),
                       _mm256_add_pd(cmul_256(m10r, m10i, a0), cmul_256(m11r, m11i, a1)));
    }
  }
}

void probabilities_avx2(std::span<const Complex> amps, std::span<double> out) {
  const double* src = reinterpret_cast<const double*>(amps.data());
  const std::size_t n = amps.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v0 = _mm256_loadu_pd(src + 2 * i);
    const __m256d v1 = _mm256_loadu_pd(src + 2 * i + 4);
    // hadd gives [p0, p2, p1, p3]; restore order across lanes.
    const __m256d sums = _mm256_hadd_pd(_mm256_mul_pd(v0, v0), _mm256_mul_pd(v1, v1));
    _mm256_storeu_pd(out.data() + i, _mm256_permute4x64_pd(sums, 0b11011000));
  }
  for (; i < n; ++i) {
    const double re = amps[i].real();
    const double im = amps[i].imag();
    out[i] = re * re + im * im;
  }
}

}  // namespace qrot::kernels
