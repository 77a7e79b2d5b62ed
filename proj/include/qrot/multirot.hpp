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
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qrot/bloch.hpp"
#include "qrot/rotation.hpp"
#include "qrot/simulator.hpp"

namespace qrot {

/// Largest batch the multi-vector pipeline accepts (ten control qubits).
inline constexpr std::size_t kMaxBatchSize = 1024;

/// Fewer samples than this in any basis marks an index as under-sampled.
inline constexpr std::uint64_t kMinBranchSamples = 25;

/// p unit vectors stored on n = max(1, ⌈log₂ p⌉) control qubits plus one data
/// qubit.
///
/// Qubit 0 is the data qubit and control qubit j + 1 carries bit j of the
/// branch pattern, so the control adjacent to the data qubit holds the least
/// significant bit. Vector i (1-based) lives on the branch whose pattern is
/// the binary form of i − 1.
class VectorBatch {
 public:
  /// DomainError for an empty batch, more than 1024 vectors or a non-unit
  /// vector.
  explicit VectorBatch(std::vector<Vec3> vectors);

  const std::vector<Vec3>& vectors() const { return vectors_; }
  std::size_t size() const { return vectors_.size(); }
  unsigned control_qubits() const { return n_; }
  unsigned width() const { return n_ + 1; }
  std::size_t branches() const { return std::size_t{1} << n_; }

 private:
  std::vector<Vec3> vectors_;
  unsigned n_;
};

/// Controls selecting branch `index` (1-based) of an n-control register.
std::vector<Control> branch_controls(std::size_t index, unsigned control_qubits);

/// Branch index (1-based) recorded in a measured outcome.
std::size_t branch_of_outcome(std::uint64_t outcome, unsigned control_qubits);

struct MultiRotationPlan {
  VectorBatch batch;
  /// One rotation for every vector, or one per vector (same length as batch).
  std::variant<RotationSpec, std::vector<RotationSpec>> rotations;

  /// DomainError when a per-index list does not match the batch size.
  void validate() const;
  /// Rotation applied to vector `index` (1-based).
  const RotationSpec& rotation_for(std::size_t index) const;
};

/// H on every control qubit, then for each vector i a controlled RY(θᵢ)
/// followed by a controlled RZ(φᵢ) on the data qubit, triggered by the pattern
/// of i − 1. Branches beyond the batch receive no gates.
Circuit build_encoding_circuit(const VectorBatch& batch);

/// Uniform plan: the uncontrolled five-gate sequence on the data qubit.
/// Per-index plan: each vector's five-gate sequence controlled on its branch.
Circuit build_rotation_layer(const MultiRotationPlan& plan);

/// Encoding followed by the rotation layer.
Circuit build_multi_rotation_circuit(const MultiRotationPlan& plan);

/// Conditional data-qubit state on branch `index` (1-based) of an exact
/// statevector whose qubit 0 is the data qubit.
StateVector branch_state(const StateVector& full, std::size_t index);

/// Exact per-vector Bloch vectors after the plan, one per batch entry.
std::vector<Vec3> exact_branch_vectors(const MultiRotationPlan& plan);

struct ExtractedVector {
  std::size_t index = 0;                     // 1-based
  std::optional<Vec3> vector;                // empty when error is set
  std::array<std::uint64_t, 3> samples{};    // per data basis X, Y, Z
  bool under_sampled = false;
  std::string error;

  std::uint64_t total_samples() const { return samples[0] + samples[1] + samples[2]; }
};

/// Groups per-basis results (data qubit measured in X, Y, Z in that order)
/// by branch and reconstructs the first `p` vectors.
std::vector<ExtractedVector> extract_from_results(const std::array<ShotResult, 3>& results, std::size_t p,
                                                  unsigned control_qubits);

/// Runs the full circuit k·2ⁿ times in each data basis (controls in Z), groups
/// shots by branch and reconstructs every vector by single-qubit state
/// tomography on its samples. An index with no samples in some basis yields
/// an entry carrying an error instead of a vector. DomainError when k < 100.
std::vector<ExtractedVector> extract_all(const MultiRotationPlan& plan, std::uint64_t shots_per_vector,
                                         const NoiseModel& noise, std::uint64_t seed,
                                         unsigned workers = 1);

}  // namespace qrot
