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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrot/circuit.hpp"
#include "qrot/linalg.hpp"
#include "qrot/rng.hpp"

namespace qrot {

enum class PauliBasis { X, Y, Z };

char to_char(PauliBasis b);
/// "X", "Y" or "Z" (either case); anything else is a DomainError.
PauliBasis parse_basis(std::string_view label);

/// Stochastic Pauli noise. After every gate a uniformly chosen X, Y or Z hits
/// the gate's target with probability depol_1q (uncontrolled gates) or
/// depol_ctrl (controlled gates). Each measured bit then flips independently
/// with probability readout_flip.
struct NoiseModel {
  double depol_1q = 0.0;
  double depol_ctrl = 0.0;
  double readout_flip = 0.0;

  /// DomainError unless every probability lies in [0, 1].
  void validate() const;
  bool is_noiseless() const { return depol_1q == 0.0 && depol_ctrl == 0.0 && readout_flip == 0.0; }
  bool has_gate_noise() const { return depol_1q > 0.0 || depol_ctrl > 0.0; }

  static NoiseModel ideal() { return {}; }
  /// depol_1q = 0.001, depol_ctrl = 0.01, readout_flip = 0.02
  static NoiseModel nisq_lite() { return {0.001, 0.01, 0.02}; }

  friend bool operator==(const NoiseModel&, const NoiseModel&) = default;
};

struct ShotResult {
  unsigned num_qubits = 0;
  std::vector<PauliBasis> basis;  // per qubit
  /// Outcome index (qubit 0 = least-significant bit) -> occurrences.
  std::map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t shots = 0;

  /// Same counts keyed by bitstrings printed most-significant qubit first.
  std::map<std::string, std::uint64_t> bitstring_counts() const;

  friend bool operator==(const ShotResult&, const ShotResult&) = default;
};

/// Outcome index as a bitstring, most-significant qubit first.
std::string bitstring(std::uint64_t outcome, unsigned width);

/// Exact evolution of `initial` through every gate. ShapeError when the
/// widths differ.
StateVector apply(const Circuit& circuit, const StateVector& initial);

/// Circuit followed by the rotations that map each qubit's basis onto Z:
/// H for X, RZ(−π/2) then H for Y, nothing for Z.
Circuit with_basis_change(const Circuit& circuit, std::span<const PauliBasis> basis);

/// One noisy pass from |0…0⟩, consuming draws from `stream` gate by gate.
/// With gate noise off no draws are consumed and the result equals apply().
StateVector noisy_trajectory(const Circuit& circuit, const NoiseModel& noise, rng::Stream& stream);

/// Samples `shots` measurements of `circuit` (started from |0…0⟩) in the given
/// per-qubit bases.
///
/// Shot s draws only from rng::Stream(seed, s): first its gate-noise events,
/// then one uniform for the Born outcome, then one uniform per qubit for
/// readout flips (each step skipped when its probability is zero). Counts are
/// therefore identical for any `workers` value, and a run with fewer shots is
/// a prefix of a run with more.
ShotResult sample(const Circuit& circuit, std::span<const PauliBasis> basis, std::uint64_t shots,
                  const NoiseModel& noise, std::uint64_t seed, unsigned workers = 1);

/// Label-based overload; DomainError on an unknown label or wrong count.
ShotResult sample(const Circuit& circuit, const std::vector<std::string>& basis_labels,
                  std::uint64_t shots, const NoiseModel& noise, std::uint64_t seed,
                  unsigned workers = 1);

/// (N₀ − N₁) / shots for the addressed bit, in [−1, 1].
double expectation_from_counts(const ShotResult& result, unsigned qubit);

}  // namespace qrot
