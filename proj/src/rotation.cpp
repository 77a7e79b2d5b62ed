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

#include "qrot/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qrot {

RotationSpec::RotationSpec(Vec3 axis, double angle) : axis_(axis), angle_(angle) {
  require_unit(axis, "rotation axis");
  if (!std::isfinite(angle)) throw DomainError("rotation angle must be finite");
}

RotationSpec RotationSpec::from_axis(Vec3 raw_axis, double angle) {
  return RotationSpec(normalize(raw_axis).unit, angle);
}

double RotationSpec::reported_angle() const {
  constexpr double period = 4.0 * std::numbers::pi;
  double r = std::fmod(angle_, period);
  if (r < 0.0) r += period;
  return r;
}

ErParams ErParams::canonical() const {
  double sign = 1.0;
  if (std::abs(2.0 * a) > kTraceEpsilon) {
    sign = a > 0.0 ? 1.0 : -1.0;
  } else {
    for (double v : {b, c, d}) {
      if (std::abs(v) > kTraceEpsilon) {
        sign = v > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
  }
  return {sign * a, sign * b, sign * c, sign * d};
}

double max_abs_diff(const ErParams& p, const ErParams& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                   std::abs(p.d - q.d)});
}

Mat3 Mat3::identity() {
  Mat3 r;
  r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
  return r;
}

Mat3 Mat3::transpose() const {
  Mat3 t;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

double Mat3::determinant() const {
  const Mat3& a = *this;
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

double Mat3::rotation_error() const {
  return std::max(max_abs_diff(transpose() * (*this), identity()), std::abs(determinant() - 1.0));
}

Vec3 operator*(const Mat3& r, Vec3 v) {
  return {r(0, 0) * v.x + r(0, 1) * v.y + r(0, 2) * v.z,
          r(1, 0) * v.x + r(1, 1) * v.y + r(1, 2) * v.z,
          r(2, 0) * v.x + r(2, 1) * v.y + r(2, 2) * v.z};
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double acc = 0.0;
      for (int k = 0; k < 3; ++k) acc += a(i, k) * b(k, j);
      out(i, j) = acc;
    }
  }
  return out;
}

double max_abs_diff(const Mat3& a, const Mat3& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 9; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
  return worst;
}

Mat3 rodrigues_matrix(const RotationSpec& spec) {
  const Vec3 u = spec.axis();
  const double c = std::cos(spec.angle());
  const double s = std::sin(spec.angle());
  const double t = 1.0 - c;
  const std::array<double, 3> uv = {u.x, u.y, u.z};
  // [u]x
  const std::array<double, 9> skew = {0.0, -u.z, u.y, u.z, 0.0, -u.x, -u.y, u.x, 0.0};
  Mat3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      r(i, j) = (i == j ? c : 0.0) + s * skew[3 * ui + uj] + t * uv[ui] * uv[uj];
    }
  }
  return r;
}

Vec3 rodrigues_rotate(const RotationSpec& spec, Vec3 x) {
  const Vec3 u = spec.axis();
  const Vec3 uxx = cross(u, x);
  return dot(u, x) * u + std::cos(spec.angle()) * cross(uxx, u) + std::sin(spec.angle()) * uxx;
}

ErParams erp_from_spec(const RotationSpec& spec) {
  const double half = spec.angle() / 2.0;
  const double s = std::sin(half);
  const Vec3 n = spec.axis();
  return {std::cos(half), n.x * s, n.y * s, n.z * s};
}

Mat3 er_matrix(const ErParams& p) {
  if (std::abs(p.norm_squared() - 1.0) > 1e-6) {
    throw DomainError("Euler-Rodrigues parameters violate a²+b²+c²+d² = 1 (got " +
                      std::to_string(p.norm_squared()) + ")");
  }
  const double a = p.a, b = p.b, c = p.c, d = p.d;
  Mat3 r;
  r.m = {a * a + b * b - c * c - d * d, 2.0 * (b * c - a * d),         2.0 * (b * d + a * c),
         2.0 * (b * c + a * d),         a * a + c * c - b * b - d * d, 2.0 * (c * d - a * b),
         2.0 * (b * d - a * c),         2.0 * (c * d + a * b),         a * a + d * d - b * b - c * c};
  return r;
}

std::vector<GateOp> axis_rotation_sequence(const RotationSpec& spec, unsigned target,
                                           const std::vector<Control>& controls) {
  const SphericalAngles n = vec_to_angles(spec.axis());
  return {rz(-n.phi, target, controls), ry(-n.theta, target, controls),
          rz(spec.angle(), target, controls), ry(n.theta, target, controls),
          rz(n.phi, target, controls)};
}

ComplexMatrix axis_rotation_unitary(const RotationSpec& spec) {
  const double half = spec.angle() / 2.0;
  const Vec3 n = spec.axis();
  const Complex minus_i_sin(0.0, -std::sin(half));
  ComplexMatrix u = Complex(std::cos(half)) * pauli(0);
  u += (minus_i_sin * n.x) * pauli(1);
  u += (minus_i_sin * n.y) * pauli(2);
  u += (minus_i_sin * n.z) * pauli(3);
  return u;
}

ErParams erp_from_unitary(const ComplexMatrix& u) {
  if (u.rows() != 2 || u.cols() != 2) throw ShapeError("erp_from_unitary expects a 2x2 matrix");
  const double err = unitarity_error(u);
  if (err > 1e-6) {
    throw DomainError("erp_from_unitary: input is not unitary (‖U†U − I‖_max = " +
                      std::to_string(err) + ")");
  }
  const Complex i(0.0, 1.0);
  auto components = [&](const ComplexMatrix& m) {
    return std::array<Complex, 4>{trace(m) / 2.0, i * trace(matmul(m, pauli(1))) / 2.0,
                                  i * trace(matmul(m, pauli(2))) / 2.0,
                                  i * trace(matmul(m, pauli(3))) / 2.0};
  };

  std::array<Complex, 4> t = components(u);
  Complex phase(1.0, 0.0);
  if (std::abs(t[0]) > kTraceEpsilon / 2.0) {
    phase = std::conj(t[0]) / std::abs(t[0]);
  } else {
    for (std::size_t k = 1; k < 4; ++k) {
      if (std::abs(t[k]) > kTraceEpsilon) {
        phase = std::conj(t[k]) / std::abs(t[k]);
        break;
      }
    }
  }
  for (Complex& z : t) z *= phase;
  return {t[0].real(), t[1].real(), t[2].real(), t[3].real()};
}

double phase_aligned_max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex overlap = trace(matmul(a.adjoint(), b));
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return max_abs_diff(phase * a, b);
}

}  // namespace qrot
