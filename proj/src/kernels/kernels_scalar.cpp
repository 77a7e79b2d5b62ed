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

#include <cstddef>

#include "qrot/kernels.hpp"

namespace qrot::kernels {

Mat2 Mat2::from(const ComplexMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw ShapeError("Mat2::from expects a 2x2 matrix");
  return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

namespace {

// Written out in real arithmetic so the AVX2 path (mul + addsub) rounds the
// same way.
inline Complex mul(Complex a, Complex b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

inline Complex add(Complex a, Complex b) { return {a.real() + b.real(), a.imag() + b.imag()}; }

}  // namespace

void apply_1q_scalar(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
                     std::uint64_t ctrl_value, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << target;
  const std::size_t n = amps.size();
  for (std::size_t base = 0; base < n; base += 2 * bit) {
    for (std::size_t off = 0; off < bit; ++off) {
      const std::size_t i0 = base + off;
      if ((i0 & ctrl_mask) != ctrl_value) continue;
      const std::size_t i1 = i0 | bit;
      const Complex a0 = amps[i0];
      const Complex a1 = amps[i1];
      amps[i0] = add(mul(m.m00, a0), mul(m.m01, a1));
      amps[i1] = add(mul(m.m10, a0), mul(m.m11, a1));
    }
  }
}

void probabilities_scalar(std::span<const Complex> amps, std::span<double> out) {
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double re = amps[i].real();
    const double im = amps[i].imag();
    out[i] = re * re + im * im;
  }
}

}  // namespace qrot::kernels
