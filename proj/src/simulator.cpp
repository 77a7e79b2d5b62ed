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

#include "qrot/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <thread>

#include "qrot/kernels.hpp"

namespace qrot {

namespace {

struct CompiledOp {
  kernels::Mat2 matrix;
  unsigned target;
  std::uint64_t ctrl_mask;
  std::uint64_t ctrl_value;
  double error_probability;
};

std::vector<CompiledOp> compile(const Circuit& circuit, const NoiseModel& noise) {
  std::vector<CompiledOp> out;
  out.reserve(circuit.size());
  for (const GateOp& op : circuit.ops()) {
    CompiledOp c{kernels::Mat2::from(op.matrix()), op.target, 0, 0,
                 op.controls.empty() ? noise.depol_1q : noise.depol_ctrl};
    for (const Control& ctl : op.controls) {
      c.ctrl_mask |= std::uint64_t{1} << ctl.qubit;
      if (ctl.trigger == 1) c.ctrl_value |= std::uint64_t{1} << ctl.qubit;
    }
    out.push_back(c);
  }
  return out;
}

const std::array<kernels::Mat2, 3>& pauli_errors() {
  static const std::array<kernels::Mat2, 3> kErrors = {kernels::Mat2::from(pauli(1)),
                                                       kernels::Mat2::from(pauli(2)),
                                                       kernels::Mat2::from(pauli(3))};
  return kErrors;
}

struct ErrorEvent {
  std::size_t after_op;
  std::uint8_t pauli;  // 0 = X, 1 = Y, 2 = Z
};

// Draw order: one uniform per gate with nonzero error probability, plus one
// index draw when that uniform fires.
void draw_errors(const std::vector<CompiledOp>& ops, rng::Stream& stream,
                 std::vector<ErrorEvent>& events) {
  events.clear();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const double p = ops[i].error_probability;
    if (p <= 0.0) continue;
    if (stream.uniform() < p) {
      events.push_back({i, static_cast<std::uint8_t>(stream.below(3))});
    }
  }
}

void run_ops(const std::vector<CompiledOp>& ops, const std::vector<ErrorEvent>& events,
             std::span<Complex> amps) {
  std::size_t next_event = 0;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const CompiledOp& op = ops[i];
    kernels::apply_1q(amps, op.target, op.ctrl_mask, op.ctrl_value, op.matrix);
    while (next_event < events.size() && events[next_event].after_op == i) {
      kernels::apply_1q(amps, op.target, 0, 0, pauli_errors()[events[next_event].pauli]);
      ++next_event;
    }
  }
}

void reset_to_zero(std::vector<Complex>& amps) {
  std::fill(amps.begin(), amps.end(), Complex{});
  amps[0] = 1.0;
}

std::vector<double> cumulative(std::span<const Complex> amps) {
  std::vector<double> probs(amps.size());
  kernels::probabilities(amps, probs);
  for (std::size_t i = 1; i < probs.size(); ++i) probs[i] += probs[i - 1];
  return probs;
}

std::uint64_t draw_outcome(const std::vector<double>& cdf, double u) {
  // Scale by the total so a norm a few ulps short of 1 cannot leave u
  // beyond the last bucket.
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) --it;
  return static_cast<std::uint64_t>(it - cdf.begin());
}

}  // namespace

char to_char(PauliBasis b) {
  switch (b) {
    case PauliBasis::X: return 'X';
    case PauliBasis::Y: return 'Y';
    case PauliBasis::Z: return 'Z';
  }
  return '?';
}

PauliBasis parse_basis(std::string_view label) {
  if (label.size() == 1) {
    switch (std::toupper(static_cast<unsigned char>(label[0]))) {
      case 'X': return PauliBasis::X;
      case 'Y': return PauliBasis::Y;
      case 'Z': return PauliBasis::Z;
      default: break;
    }
  }
  throw DomainError("invalid measurement basis label '" + std::string(label) + "'");
}

void NoiseModel::validate() const {
  for (double p : {depol_1q, depol_ctrl, readout_flip}) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("noise probabilities must lie in [0, 1]");
  }
}

std::string bitstring(std::uint64_t outcome, unsigned width) {
  std::string s(width, '0');
  for (unsigned q = 0; q < width; ++q) {
    if ((outcome >> q) & 1U) s[width - 1 - q] = '1';
  }
  return s;
}

std::map<std::string, std::uint64_t> ShotResult::bitstring_counts() const {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [outcome, n] : counts) out[bitstring(outcome, num_qubits)] = n;
  return out;
}

StateVector apply(const Circuit& circuit, const StateVector& initial) {
  if (circuit.num_qubits() != initial.num_qubits()) {
    throw ShapeError("apply: circuit has " + std::to_string(circuit.num_qubits()) +
                     " qubits, state has " + std::to_string(initial.num_qubits()));
  }
  StateVector out = initial;
  run_ops(compile(circuit, NoiseModel::ideal()), {}, out.mutable_amplitudes());
  return out;
}

Circuit with_basis_change(const Circuit& circuit, std::span<const PauliBasis> basis) {
  if (basis.size() != circuit.num_qubits()) {
    throw DomainError("expected " + std::to_string(circuit.num_qubits()) +
                      " basis labels, got " + std::to_string(basis.size()));
  }
  Circuit out = circuit;
  for (unsigned q = 0; q < basis.size(); ++q) {
    switch (basis[q]) {
      case PauliBasis::X:
        out.add(h(q));
        break;
      case PauliBasis::Y:
        out.add(rz(-std::numbers::pi / 2.0, q));
        out.add(h(q));
        break;
      case PauliBasis::Z:
        break;
    }
  }
  return out;
}

StateVector noisy_trajectory(const Circuit& circuit, const NoiseModel& noise, rng::Stream& stream) {
  noise.validate();
  const std::vector<CompiledOp> ops = compile(circuit, noise);
  std::vector<ErrorEvent> events;
  draw_errors(ops, stream, events);
  StateVector out(circuit.num_qubits());
  run_ops(ops, events, out.mutable_amplitudes());
  return out;
}

ShotResult sample(const Circuit& circuit, std::span<const PauliBasis> basis, std::uint64_t shots,
                  const NoiseModel& noise, std::uint64_t seed, unsigned workers) {
  if (shots < 1) throw DomainError("sample: shots must be at least 1");
  noise.validate();
  const Circuit full = with_basis_change(circuit, basis);
  const std::vector<CompiledOp> ops = compile(full, noise);
  const unsigned width = full.num_qubits();

  std::vector<Complex> ideal(std::size_t{1} << width);
  reset_to_zero(ideal);
  run_ops(ops, {}, ideal);
  const std::vector<double> ideal_cdf = cumulative(ideal);

  const bool gate_noise = noise.has_gate_noise();
  const double flip = noise.readout_flip;

  auto run_range = [&](std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& counts) {
    std::vector<Complex> scratch(ideal.size());
    std::vector<ErrorEvent> events;
    for (std::uint64_t s = begin; s < end; ++s) {
      rng::Stream stream(seed, s);
      std::uint64_t outcome;
      if (gate_noise) draw_errors(ops, stream, events);
      if (!gate_noise || events.empty()) {
        outcome = draw_outcome(ideal_cdf, stream.uniform());
      } else {
        reset_to_zero(scratch);
        run_ops(ops, events, scratch);
        outcome = draw_outcome(cumulative(scratch), stream.uniform());
      }
      if (flip > 0.0) {
        for (unsigned q = 0; q < width; ++q) {
          if (stream.uniform() < flip) outcome ^= std::uint64_t{1} << q;
        }
      }
      ++counts[outcome];
    }
  };

  ShotResult result{width, std::vector<PauliBasis>(basis.begin(), basis.end()), {}, shots};
  workers = std::clamp<unsigned>(workers, 1U, static_cast<unsigned>(std::min<std::uint64_t>(shots, 64)));
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(ideal.size()));
  if (workers == 1) {
    run_range(0, shots, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    const std::uint64_t chunk = (shots + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(shots, w * chunk);
      const std::uint64_t end = std::min(shots, begin + chunk);
      threads.emplace_back([&, w, begin, end] { run_range(begin, end, partial[w]); });
    }
  }
  for (const auto& part : partial) {
    for (std::size_t outcome = 0; outcome < part.size(); ++outcome) {
      if (part[outcome] != 0) result.counts[outcome] += part[outcome];
    }
  }
  return result;
}

ShotResult sample(const Circuit& circuit, const std::vector<std::string>& basis_labels,
                  std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed,
                  unsigned workers) {
  std::vector<PauliBasis> basis;
  basis.reserve(basis_labels.size());
  for (const std::string& label : basis_labels) basis.push_back(parse_basis(label));
  return sample(circuit, basis, shots, noise, seed, workers);
}

double expectation_from_counts(const ShotResult& result, unsigned qubit) {
  if (result.shots == 0 || result.counts.empty()) {
    throw DomainError("expectation_from_counts: no counts");
  }
  if (qubit >= result.num_qubits) throw DomainError("expectation_from_counts: qubit out of range");
  std::int64_t balance = 0;
  std::uint64_t total = 0;
  for (const auto& [outcome, n] : result.counts) {
    balance += ((outcome >> qubit) & 1U) ? -static_cast<std::int64_t>(n) : static_cast<std::int64_t>(n);
    total += n;
  }
  return static_cast<double>(balance) / static_cast<double>(total);
}

}  // namespace qrot
