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

#include "qrot/gates.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qrot {

namespace {

void require_finite_angle(double theta) {
  if (!std::isfinite(theta)) throw DomainError("rotation angle must be finite");
}

}  // namespace

ComplexMatrix gate_rx(double theta) {
  require_finite_angle(theta);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ComplexMatrix(2, 2, {Complex(c, 0.0), Complex(0.0, -s), Complex(0.0, -s), Complex(c, 0.0)});
}

ComplexMatrix gate_ry(double theta) {
  require_finite_angle(theta);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return ComplexMatrix(2, 2, {c, -s, s, c});
}

ComplexMatrix gate_rz(double theta) {
  require_finite_angle(theta);
  return ComplexMatrix(2, 2, {std::polar(1.0, -theta / 2.0), 0.0, 0.0, std::polar(1.0, theta / 2.0)});
}

ComplexMatrix gate_h() {
  constexpr double r = std::numbers::sqrt2 / 2.0;
  return ComplexMatrix(2, 2, {r, r, r, -r});
}

ComplexMatrix gate_x() { return pauli_x(); }

}  // namespace qrot
