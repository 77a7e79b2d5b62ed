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

#include "qrot/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "qrot/gates.hpp"

namespace qrot {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::X: return "X";
  }
  return "?";
}

ComplexMatrix GateOp::matrix() const {
  switch (kind) {
    case GateKind::RX: return gate_rx(theta);
    case GateKind::RY: return gate_ry(theta);
    case GateKind::RZ: return gate_rz(theta);
    case GateKind::H: return gate_h();
    case GateKind::X: return gate_x();
  }
  throw DomainError("unknown gate kind");
}

std::string GateOp::describe(int precision) const {
  std::string out = to_string(kind);
  if (kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "(%.*f)", precision, theta);
    out += buf;
  }
  out += " q" + std::to_string(target);
  if (!controls.empty()) {
    out += " [";
    for (std::size_t i = 0; i < controls.size(); ++i) {
      if (i) out += ",";
      out += "c" + std::to_string(controls[i].qubit) + "=" + std::to_string(controls[i].trigger);
    }
    out += "]";
  }
  return out;
}

GateOp rx(double theta, unsigned target, std::vector<Control> controls) {
  return {GateKind::RX, theta, target, std::move(controls)};
}
GateOp ry(double theta, unsigned target, std::vector<Control> controls) {
  return {GateKind::RY, theta, target, std::move(controls)};
}
GateOp rz(double theta, unsigned target, std::vector<Control> controls) {
  return {GateKind::RZ, theta, target, std::move(controls)};
}
GateOp h(unsigned target, std::vector<Control> controls) {
  return {GateKind::H, 0.0, target, std::move(controls)};
}
GateOp x(unsigned target, std::vector<Control> controls) {
  return {GateKind::X, 0.0, target, std::move(controls)};
}

Circuit::Circuit(unsigned num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0 || num_qubits > kMaxQubits) {
    throw DomainError("circuit width must be 1.." + std::to_string(kMaxQubits) + ", got " +
                      std::to_string(num_qubits));
  }
}

Circuit& Circuit::add(GateOp op) {
  if (op.target >= num_qubits_) {
    throw DomainError("gate target q" + std::to_string(op.target) + " outside a " +
                      std::to_string(num_qubits_) + "-qubit circuit");
  }
  if (!std::isfinite(op.theta)) throw DomainError("gate angle must be finite");
  for (std::size_t i = 0; i < op.controls.size(); ++i) {
    const Control& c = op.controls[i];
    if (c.qubit >= num_qubits_) throw DomainError("control qubit out of range");
    if (c.qubit == op.target) throw DomainError("gate target appears among its controls");
    if (c.trigger != 0 && c.trigger != 1) throw DomainError("control trigger must be 0 or 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (op.controls[j].qubit == c.qubit) throw DomainError("repeated control qubit");
    }
  }
  ops_.push_back(std::move(op));
  return *this;
}

Circuit& Circuit::append(const std::vector<GateOp>& ops) {
  for (const GateOp& op : ops) add(op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() > num_qubits_) throw ShapeError("appending a wider circuit");
  return append(other.ops());
}

ComplexMatrix compose_single_qubit(const std::vector<GateOp>& ops) {
  ComplexMatrix u = ComplexMatrix::identity(2);
  for (const GateOp& op : ops) {
    if (!op.controls.empty()) throw DomainError("compose_single_qubit: controlled gate");
    u = matmul(op.matrix(), u);
  }
  return u;
}

}  // namespace qrot
