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

#include <cstdint>
#include <string>
#include <vector>

#include "qrot/linalg.hpp"

namespace qrot {

/// Widest circuit the simulator accepts: ten control qubits plus one data qubit
/// leaves one to spare.
inline constexpr unsigned kMaxQubits = 12;

enum class GateKind { RX, RY, RZ, H, X };

std::string to_string(GateKind kind);

/// Control on `qubit` that fires when that qubit reads `trigger` (0 or 1).
struct Control {
  unsigned qubit = 0;
  int trigger = 1;

  friend bool operator==(const Control&, const Control&) = default;
};

struct GateOp {
  GateKind kind = GateKind::H;
  double theta = 0.0;  // radians; 0 for H and X
  unsigned target = 0;
  std::vector<Control> controls;

  /// The 2x2 unitary acting on the target.
  ComplexMatrix matrix() const;
  /// e.g. "RZ(-0.4636) q0" or "RY(0.9553) q0 [c1=0,c2=1]"
  std::string describe(int precision = 4) const;

  friend bool operator==(const GateOp&, const GateOp&) = default;
};

GateOp rx(double theta, unsigned target, std::vector<Control> controls = {});
GateOp ry(double theta, unsigned target, std::vector<Control> controls = {});
GateOp rz(double theta, unsigned target, std::vector<Control> controls = {});
GateOp h(unsigned target, std::vector<Control> controls = {});
GateOp x(unsigned target, std::vector<Control> controls = {});

/// Ordered gate list on a fixed number of qubits. Every op is validated on
/// insertion: indices in range, target not among its controls, no repeated
/// control qubit, trigger values in {0, 1}.
class Circuit {
 public:
  explicit Circuit(unsigned num_qubits);

  unsigned num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  Circuit& add(GateOp op);
  Circuit& append(const std::vector<GateOp>& ops);
  Circuit& append(const Circuit& other);

 private:
  unsigned num_qubits_;
  std::vector<GateOp> ops_;
};

/// Product of a single-qubit gate list in application order (last op leftmost).
/// Controls are rejected.
ComplexMatrix compose_single_qubit(const std::vector<GateOp>& ops);

}  // namespace qrot
