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

#include "qrot/multirot.hpp"

#include <bit>
#include <string>

#include "qrot/rng.hpp"
#include "qrot/tomography.hpp"

namespace qrot {

namespace {

unsigned control_count(std::size_t p) {
  if (p <= 2) return 1;
  return static_cast<unsigned>(std::bit_width(p - 1));
}

constexpr std::array<PauliBasis, 3> kDataBases = {PauliBasis::X, PauliBasis::Y, PauliBasis::Z};

}  // namespace

VectorBatch::VectorBatch(std::vector<Vec3> vectors) : vectors_(std::move(vectors)) {
  if (vectors_.empty()) throw DomainError("vector batch is empty");
  if (vectors_.size() > kMaxBatchSize) {
    throw DomainError("vector batch holds " + std::to_string(vectors_.size()) + " vectors; at most " +
                      std::to_string(kMaxBatchSize) + " are supported");
  }
  for (std::size_t i = 0; i < vectors_.size(); ++i) {
    if (!is_unit(vectors_[i])) {
      throw DomainError("batch vector " + std::to_string(i + 1) + " is not unit length");
    }
  }
  n_ = control_count(vectors_.size());
}

std::vector<Control> branch_controls(std::size_t index, unsigned control_qubits) {
  if (index < 1 || index > (std::size_t{1} << control_qubits)) {
    throw DomainError("branch index " + std::to_string(index) + " out of range");
  }
  const std::size_t pattern = index - 1;
  std::vector<Control> controls;
  controls.reserve(control_qubits);
  for (unsigned j = 0; j < control_qubits; ++j) {
    controls.push_back({j + 1, static_cast<int>((pattern >> j) & 1U)});
  }
  return controls;
}

std::size_t branch_of_outcome(std::uint64_t outcome, unsigned control_qubits) {
  return static_cast<std::size_t>((outcome >> 1) & ((std::uint64_t{1} << control_qubits) - 1)) + 1;
}

void MultiRotationPlan::validate() const {
  if (const auto* list = std::get_if<std::vector<RotationSpec>>(&rotations)) {
    if (list->size() != batch.size()) {
      throw DomainError("per-index plan has " + std::to_string(list->size()) + " rotations for " +
                        std::to_string(batch.size()) + " vectors");
    }
  }
}

const RotationSpec& MultiRotationPlan::rotation_for(std::size_t index) const {
  if (index < 1 || index > batch.size()) throw DomainError("rotation index out of range");
  if (const auto* uniform = std::get_if<RotationSpec>(&rotations)) return *uniform;
  return std::get<std::vector<RotationSpec>>(rotations).at(index - 1);
}

Circuit build_encoding_circuit(const VectorBatch& batch) {
  const unsigned n = batch.control_qubits();
  Circuit c(batch.width());
  for (unsigned j = 1; j <= n; ++j) c.add(h(j));
  for (std::size_t i = 1; i <= batch.size(); ++i) {
    const SphericalAngles a = vec_to_angles(batch.vectors()[i - 1]);
    const std::vector<Control> controls = branch_controls(i, n);
    c.add(ry(a.theta, 0, controls));
    c.add(rz(a.phi, 0, controls));
  }
  return c;
}

Circuit build_rotation_layer(const MultiRotationPlan& plan) {
  plan.validate();
  const VectorBatch& batch = plan.batch;
  Circuit c(batch.width());
  if (const auto* uniform = std::get_if<RotationSpec>(&plan.rotations)) {
    c.append(axis_rotation_sequence(*uniform, 0));
    return c;
  }
  for (std::size_t i = 1; i <= batch.size(); ++i) {
    c.append(axis_rotation_sequence(plan.rotation_for(i), 0,
                                    branch_controls(i, batch.control_qubits())));
  }
  return c;
}

Circuit build_multi_rotation_circuit(const MultiRotationPlan& plan) {
  Circuit c = build_encoding_circuit(plan.batch);
  c.append(build_rotation_layer(plan));
  return c;
}

StateVector branch_state(const StateVector& full, std::size_t index) {
  const unsigned n = full.num_qubits() - 1;
  if (full.num_qubits() < 2 || index < 1 || index > (std::size_t{1} << n)) {
    throw DomainError("branch_state: index out of range");
  }
  const std::size_t base = (index - 1) << 1;
  return StateVector::normalized({full[base], full[base | 1U]});
}

std::vector<Vec3> exact_branch_vectors(const MultiRotationPlan& plan) {
  const Circuit c = build_multi_rotation_circuit(plan);
  const StateVector out = apply(c, StateVector(c.num_qubits()));
  std::vector<Vec3> vectors;
  vectors.reserve(plan.batch.size());
  for (std::size_t i = 1; i <= plan.batch.size(); ++i) {
    vectors.push_back(state_to_bloch(branch_state(out, i)));
  }
  return vectors;
}

std::vector<ExtractedVector> extract_from_results(const std::array<ShotResult, 3>& results, std::size_t p,
                                                  unsigned control_qubits) {
  // Per branch and basis: shots seen and the (+1) − (−1) balance of the data bit.
  std::vector<std::array<std::uint64_t, 3>> seen(p);
  std::vector<std::array<std::int64_t, 3>> balance(p);
  for (std::size_t b = 0; b < kDataBases.size(); ++b) {
    for (const auto& [outcome, count] : results[b].counts) {
      const std::size_t index = branch_of_outcome(outcome, control_qubits);
      if (index > p) continue;  // unused branch
      seen[index - 1][b] += count;
      balance[index - 1][b] += (outcome & 1U) ? -static_cast<std::int64_t>(count)
                                              : static_cast<std::int64_t>(count);
    }
  }

  std::vector<ExtractedVector> out;
  out.reserve(p);
  for (std::size_t i = 0; i < p; ++i) {
    ExtractedVector e;
    e.index = i + 1;
    e.samples = seen[i];
    bool empty = false;
    for (std::size_t b = 0; b < 3; ++b) {
      e.under_sampled = e.under_sampled || seen[i][b] < kMinBranchSamples;
      empty = empty || seen[i][b] == 0;
    }
    if (empty) {
      e.error = "no samples for index " + std::to_string(i + 1) + " in at least one basis";
      out.push_back(std::move(e));
      continue;
    }
    Vec3 expectations;
    std::array<double*, 3> slots = {&expectations.x, &expectations.y, &expectations.z};
    for (std::size_t b = 0; b < 3; ++b) {
      *slots[b] = static_cast<double>(balance[i][b]) / static_cast<double>(seen[i][b]);
    }
    e.vector = state_from_expectations(expectations, seen[i]).bloch;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ExtractedVector> extract_all(const MultiRotationPlan& plan, std::uint64_t shots_per_vector,
                                         const NoiseModel& noise, std::uint64_t seed,
                                         unsigned workers) {
  if (shots_per_vector < kMinTomographyShots) {
    throw DomainError("extract_all needs at least " + std::to_string(kMinTomographyShots) +
                      " shots per vector");
  }
  plan.validate();
  const Circuit c = build_multi_rotation_circuit(plan);
  const std::uint64_t total = shots_per_vector * plan.batch.branches();
  std::array<ShotResult, 3> results;
  for (std::size_t b = 0; b < kDataBases.size(); ++b) {
    std::vector<PauliBasis> basis(c.num_qubits(), PauliBasis::Z);
    basis[0] = kDataBases[b];
    results[b] = sample(c, basis, total, noise, rng::derive(seed, b), workers);
  }
  return extract_from_results(results, plan.batch.size(), plan.batch.control_qubits());
}

}  // namespace qrot
