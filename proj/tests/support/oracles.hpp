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

#pragma once

// Independent reference implementations and random generators for tests.
// Nothing here calls the library's own rotation or simulation code.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "qrot/bloch.hpp"
#include "qrot/circuit.hpp"
#include "qrot/linalg.hpp"
#include "qrot/rotation.hpp"

namespace qrot::testing {

using Rng = std::mt19937_64;
inline constexpr double kPi = std::numbers::pi;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_unit(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  while (true) {
    const Vec3 v{n(rng), n(rng), n(rng)};
    const double r = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
    if (r > 1e-6) return {v.x / r, v.y / r, v.z / r};
  }
}

inline RotationSpec random_spec(Rng& rng) {
  return RotationSpec(random_unit(rng), uniform(rng, -2.0 * kPi, 2.0 * kPi));
}

inline std::vector<Complex> random_amplitudes(Rng& rng, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> a(dim);
  double s = 0.0;
  for (auto& z : a) {
    z = {n(rng), n(rng)};
    s += std::norm(z);
  }
  for (auto& z : a) z /= std::sqrt(s);
  return a;
}

inline ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<Complex> e(rows * cols);
  for (auto& z : e) z = {n(rng), n(rng)};
  return ComplexMatrix(rows, cols, std::move(e));
}

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
  const ComplexMatrix a = random_matrix(rng, dim, dim);
  ComplexMatrix h(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) h(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
  }
  return h;
}

// Quaternion sandwich q v q* with q = (cos θ/2, sin θ/2 n).
inline Vec3 quaternion_rotate(Vec3 n, double theta, Vec3 v) {
  const double w = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const double qx = s * n.x, qy = s * n.y, qz = s * n.z;
  // t = 2 q × v; v' = v + w t + q × t
  const double tx = 2.0 * (qy * v.z - qz * v.y);
  const double ty = 2.0 * (qz * v.x - qx * v.z);
  const double tz = 2.0 * (qx * v.y - qy * v.x);
  return {v.x + w * tx + (qy * tz - qz * ty), v.y + w * ty + (qz * tx - qx * tz),
          v.z + w * tz + (qx * ty - qy * tx)};
}

// Matrix exponential of −i θ/2 n·σ written out by hand.
inline ComplexMatrix su2(Vec3 n, double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex i(0.0, 1.0);
  return ComplexMatrix(2, 2,
                       {Complex(c, -s * n.z), -i * s * Complex(n.x, -n.y), -i * s * Complex(n.x, n.y),
                        Complex(c, s * n.z)});
}

// Bloch vector from amplitudes using explicit formulas.
inline Vec3 bloch_of(Complex a, Complex b) {
  const double nrm = std::norm(a) + std::norm(b);
  const Complex ab = std::conj(a) * b;
  return {2.0 * ab.real() / nrm, 2.0 * ab.imag() / nrm, (std::norm(a) - std::norm(b)) / nrm};
}

// Dense 2^n unitary of one gate built from Kronecker products and control
// projectors; qubit 0 is the least significant factor.
inline ComplexMatrix dense_gate(const GateOp& op, unsigned width) {
  const ComplexMatrix p0(2, 2, {1.0, 0.0, 0.0, 0.0});
  const ComplexMatrix p1(2, 2, {0.0, 0.0, 0.0, 1.0});
  const ComplexMatrix id = ComplexMatrix::identity(2);
  const std::size_t dim = std::size_t{1} << width;
  // Active projector ⊗ U on the target, plus (I − active projector) ⊗ I.
  ComplexMatrix active = ComplexMatrix::identity(1);
  ComplexMatrix passive_ref = ComplexMatrix::identity(1);
  for (int q = static_cast<int>(width) - 1; q >= 0; --q) {
    const unsigned uq = static_cast<unsigned>(q);
    const ComplexMatrix* factor = &id;
    for (const Control& c : op.controls) {
      if (c.qubit == uq) factor = c.trigger ? &p1 : &p0;
    }
    active = kron(active, uq == op.target ? op.matrix() : *factor);
    passive_ref = kron(passive_ref, uq == op.target ? id : *factor);
  }
  return active + (ComplexMatrix::identity(dim) - passive_ref);
}

inline ComplexMatrix dense_circuit(const Circuit& c) {
  ComplexMatrix u = ComplexMatrix::identity(std::size_t{1} << c.num_qubits());
  for (const GateOp& op : c.ops()) u = matmul(dense_gate(op, c.num_qubits()), u);
  return u;
}

inline Circuit random_circuit(Rng& rng, unsigned width, std::size_t gates) {
  Circuit c(width);
  std::uniform_int_distribution<unsigned> qubit(0, width - 1);
  std::uniform_int_distribution<int> kind(0, 4);
  for (std::size_t g = 0; g < gates; ++g) {
    const unsigned target = qubit(rng);
    std::vector<Control> controls;
    for (unsigned q = 0; q < width && controls.size() < 2; ++q) {
      if (q != target && uniform(rng, 0.0, 1.0) < 0.2) controls.push_back({q, static_cast<int>(rng() & 1U)});
    }
    const double theta = uniform(rng, -kPi, kPi);
    switch (kind(rng)) {
      case 0: c.add(rx(theta, target, controls)); break;
      case 1: c.add(ry(theta, target, controls)); break;
      case 2: c.add(rz(theta, target, controls)); break;
      case 3: c.add(h(target, controls)); break;
      default: c.add(x(target, controls)); break;
    }
  }
  return c;
}

}  // namespace qrot::testing
