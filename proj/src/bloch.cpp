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

#include "qrot/bloch.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace qrot {

bool is_unit(Vec3 v, double tol) {
  const double n = norm(v);
  return std::isfinite(n) && std::abs(n - 1.0) <= tol;
}

void require_unit(Vec3 v, const char* what) {
  if (!is_unit(v)) {
    throw DomainError(std::string(what) + " must be a unit vector (norm " +
                      std::to_string(norm(v)) + ")");
  }
}

Normalized normalize(Vec3 v) {
  const double n = norm(v);
  if (!std::isfinite(n)) throw DomainError("cannot normalize a non-finite vector");
  if (n == 0.0) throw DomainError("cannot normalize a zero vector");
  return {(1.0 / n) * v, n};
}

SphericalAngles vec_to_angles(Vec3 v) {
  require_unit(v, "vec_to_angles input");
  SphericalAngles s;
  s.theta = std::acos(std::clamp(v.z, -1.0, 1.0));
  if (v.x == 0.0 && v.y == 0.0) {
    s.phi = 0.0;
  } else {
    s.phi = std::atan2(v.y, v.x);
    if (s.phi <= -std::numbers::pi) s.phi = std::numbers::pi;
  }
  return s;
}

Vec3 angles_to_vec(SphericalAngles s) {
  const double st = std::sin(s.theta);
  return {st * std::cos(s.phi), st * std::sin(s.phi), std::cos(s.theta)};
}

Vec3 state_to_bloch(const StateVector& psi) {
  if (psi.num_qubits() != 1) throw ShapeError("state_to_bloch expects a single-qubit state");
  const Complex a0 = psi[0];
  const Complex a1 = psi[1];
  const Complex coherence = std::conj(a0) * a1;
  return {2.0 * coherence.real(), 2.0 * coherence.imag(), std::norm(a0) - std::norm(a1)};
}

Vec3 density_to_bloch(const ComplexMatrix& rho) {
  if (rho.rows() != 2 || rho.cols() != 2) throw ShapeError("density_to_bloch expects 2x2");
  return {2.0 * rho(1, 0).real(), 2.0 * rho(1, 0).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

StateVector bloch_to_state(Vec3 v) {
  const SphericalAngles s = vec_to_angles(v);
  const Complex phase = std::polar(1.0, s.phi);
  return StateVector({Complex(std::cos(s.theta / 2.0)), phase * std::sin(s.theta / 2.0)});
}

double angle_between(Vec3 u, Vec3 v) {
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu == 0.0 || nv == 0.0) throw DomainError("angle_between: zero vector");
  return std::atan2(norm(cross(u, v)), dot(u, v));
}

}  // namespace qrot
