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

#include <array>
#include <vector>

#include "qrot/bloch.hpp"
#include "qrot/circuit.hpp"
#include "qrot/linalg.hpp"

namespace qrot {

/// Rotation by `angle` radians (right-handed) about a unit axis.
class RotationSpec {
 public:
  /// `axis` must already be unit length within 1e-9; DomainError otherwise.
  RotationSpec(Vec3 axis, double angle);

  /// Normalizes `raw_axis`; a zero or non-finite axis is a DomainError.
  static RotationSpec from_axis(Vec3 raw_axis, double angle);

  Vec3 axis() const { return axis_; }
  double angle() const { return angle_; }
  /// Angle reduced to [0, 4π), the period of the SU(2) representation.
  double reported_angle() const;

 private:
  Vec3 axis_;
  double angle_;
};

/// Euler-Rodrigues parameters, a unit quaternion (a, b, c, d).
struct ErParams {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double norm_squared() const { return a * a + b * b + c * c + d * d; }
  std::array<double, 4> as_array() const { return {a, b, c, d}; }
  /// Representative of {p, −p} with a > 0, or, when a ≈ 0, with the first
  /// nonzero of (b, c, d) positive.
  ErParams canonical() const;

  friend bool operator==(const ErParams&, const ErParams&) = default;
};

/// Largest component-wise difference.
double max_abs_diff(const ErParams& p, const ErParams& q);

/// Real 3x3 matrix, row-major.
struct Mat3 {
  std::array<double, 9> m{};

  static Mat3 identity();
  double operator()(int r, int c) const { return m[static_cast<std::size_t>(3 * r + c)]; }
  double& operator()(int r, int c) { return m[static_cast<std::size_t>(3 * r + c)]; }
  Mat3 transpose() const;
  double determinant() const;
  /// max(‖RᵀR − I‖_max, |det R − 1|)
  double rotation_error() const;

  friend bool operator==(const Mat3&, const Mat3&) = default;
};

Vec3 operator*(const Mat3& r, Vec3 v);
Mat3 operator*(const Mat3& a, const Mat3& b);
double max_abs_diff(const Mat3& a, const Mat3& b);

// Classical oracles.

/// cosθ·I + sinθ·[u]× + (1 − cosθ)·u uᵀ
Mat3 rodrigues_matrix(const RotationSpec& spec);
/// u(u·x) + cosθ (u × x) × u + sinθ (u × x)
Vec3 rodrigues_rotate(const RotationSpec& spec, Vec3 x);
/// a = cos(θ/2), (b, c, d) = n sin(θ/2)
ErParams erp_from_spec(const RotationSpec& spec);
/// Rotation matrix parameterized by (a, b, c, d); DomainError when
/// |a² + b² + c² + d² − 1| > 1e-6.
Mat3 er_matrix(const ErParams& p);

// Quantum constructions.

/// Gates in application order: RZ(−φn), RY(−θn), RZ(θr), RY(θn), RZ(φn),
/// where (θn, φn) are the spherical angles of the axis. The first two move the
/// axis onto +z, the middle gate rotates, the last two move it back.
std::vector<GateOp> axis_rotation_sequence(const RotationSpec& spec, unsigned target = 0,
                                           const std::vector<Control>& controls = {});

/// cos(θ/2) I − i sin(θ/2) (nx X + ny Y + nz Z)
ComplexMatrix axis_rotation_unitary(const RotationSpec& spec);

/// Unitaries with |Tr U| at or below this are treated as half-turns when
/// fixing the global phase.
inline constexpr double kTraceEpsilon = 1e-9;

/// Reads (a, b, c, d) off a 2x2 unitary through Tr(U)/2 and i·Tr(Uσ_k)/2.
///
/// The global phase is fixed first: U is multiplied by e^{−i arg Tr U} when
/// |Tr U| > 1e-9, which makes a ≥ 0. For half-turns (Tr U ≈ 0) the phase is
/// chosen so that the first nonzero of (b, c, d) is real and positive. The
/// result therefore matches erp_from_spec(s).canonical().
///
/// DomainError when ‖U†U − I‖_max > 1e-6.
ErParams erp_from_unitary(const ComplexMatrix& u);

/// min over δ of max |e^{iδ} a − b|, with δ taken from arg Tr(a† b).
double phase_aligned_max_diff(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qrot
