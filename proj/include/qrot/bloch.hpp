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

#include <cmath>

#include "qrot/linalg.hpp"

namespace qrot {

/// Cartesian 3-vector.
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }
inline double max_abs_diff(Vec3 a, Vec3 b) {
  return std::fmax(std::fabs(a.x - b.x), std::fmax(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

/// Tolerance on |‖v‖ − 1| for inputs that must be unit vectors.
inline constexpr double kUnitTolerance = 1e-9;

bool is_unit(Vec3 v, double tol = kUnitTolerance);

/// Throws DomainError on a non-finite or non-unit vector.
void require_unit(Vec3 v, const char* what);

struct Normalized {
  Vec3 unit;
  double original_norm = 0.0;
};

/// Scale to unit length, keeping the original norm so callers can rescale
/// results. DomainError on zero or non-finite input.
Normalized normalize(Vec3 v);

/// Polar angle theta in [0, π] from +z and azimuth phi in (−π, π] from +x.
struct SphericalAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// φ is 0 at the poles. Non-unit input raises DomainError.
SphericalAngles vec_to_angles(Vec3 v);
Vec3 angles_to_vec(SphericalAngles s);

/// (⟨X⟩, ⟨Y⟩, ⟨Z⟩) of a single-qubit pure state.
Vec3 state_to_bloch(const StateVector& psi);

/// Bloch vector (Tr ρX, Tr ρY, Tr ρZ) of a 2x2 density matrix.
Vec3 density_to_bloch(const ComplexMatrix& rho);

/// Single-qubit state cos(θ/2)|0⟩ + e^{iφ} sin(θ/2)|1⟩ pointing along v.
StateVector bloch_to_state(Vec3 v);

/// Angle in [0, π] between two nonzero vectors, as atan2(|u×v|, u·v).
/// DomainError on a zero vector.
double angle_between(Vec3 u, Vec3 v);

}  // namespace qrot
