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
#include <vector>

#include "qrot/bloch.hpp"
#include "qrot/mitigation.hpp"
#include "qrot/rotation.hpp"
#include "qrot/simulator.hpp"

namespace qrot {

/// Fewest shots per basis (per circuit for process tomography) accepted.
inline constexpr std::uint64_t kMinTomographyShots = 100;

/// Physical single-qubit state: 2x2 Hermitian, trace 1, eigenvalues ≥ −1e-9.
class DensityMatrix {
 public:
  /// Validates the invariants; DomainError otherwise.
  explicit DensityMatrix(ComplexMatrix rho);

  const ComplexMatrix& matrix() const { return rho_; }
  Vec3 bloch() const { return density_to_bloch(rho_); }

 private:
  ComplexMatrix rho_;
};

/// ½(I + r·σ) for an arbitrary (possibly unphysical) Bloch vector.
ComplexMatrix linear_inversion(Vec3 r);

/// Maximum-likelihood projection of a Hermitian matrix onto the PSD matrices
/// with the same trace (Smolin, Gambetta & Smith 2012).
///
/// Eigenvalues of m / t are scanned from the smallest up; each one that would
/// stay negative after receiving its share of the accumulated deficit is
/// zeroed and its value added to the deficit, which is finally spread evenly
/// over the surviving eigenvalues. Eigenvectors are kept.
ComplexMatrix smolin_project(const ComplexMatrix& m, double target_trace);

/// 2x2 trace-1 form; DomainError when the input is not Hermitian or its
/// trace is not 1 within 1e-9.
DensityMatrix smolin_project(const ComplexMatrix& mu);

struct StateTomographyResult {
  Vec3 raw_bloch;       // from the three expectation values
  DensityMatrix rho;    // ML estimate
  Vec3 bloch;           // Bloch vector of rho's dominant eigenvector
  std::array<std::uint64_t, 3> samples{};  // per basis X, Y, Z
};

/// Reconstruction from measured ⟨X⟩, ⟨Y⟩, ⟨Z⟩.
StateTomographyResult state_from_expectations(Vec3 expectations,
                                              std::array<std::uint64_t, 3> samples = {});

/// Runs `circuit` three times (data qubit in X, Y and Z; other qubits in Z),
/// `shots` each, and reconstructs the data qubit. With `mitigate` the readout
/// of the data qubit is corrected by a one-qubit calibration taken with the
/// same shot count. DomainError when shots < 100.
StateTomographyResult state_tomography(const Circuit& circuit, unsigned data_qubit,
                                       std::uint64_t shots, const NoiseModel& noise,
                                       std::uint64_t seed, bool mitigate = false);

/// Process-tomography inputs |0⟩, |1⟩, |+⟩, |+i⟩, in that order.
enum class ProcessInput { Zero, One, Plus, PlusI };
inline constexpr std::array<ProcessInput, 4> kProcessInputs = {
    ProcessInput::Zero, ProcessInput::One, ProcessInput::Plus, ProcessInput::PlusI};

/// Gates preparing `input` from |0⟩ on qubit 0.
std::vector<GateOp> prepare_input(ProcessInput input);

struct KrausOperator {
  ComplexMatrix op;  // 2x2
  double weight = 0.0;  // Choi eigenvalue s_ii
};

struct ProcessTomographyResult {
  std::array<Vec3, 4> output_bloch;        // raw Bloch vectors per input
  ComplexMatrix choi_raw;                  // linear inversion
  ComplexMatrix choi;                      // PSD, trace 2
  std::vector<double> choi_eigenvalues;    // descending
  std::vector<KrausOperator> kraus;        // weights > 1e-12, descending
  ComplexMatrix unitary;                   // polar factor of the dominant Kraus operator
  bool degenerate = false;                 // λ1 − λ2 < 1e-6 with λ2 > 0.1
};

/// Choi matrix Σᵢⱼ |i⟩⟨j| ⊗ E(|i⟩⟨j|) from the channel's action on the four
/// inputs, with E(|0⟩⟨1|) = E(|+⟩⟨+|) + i E(|+i⟩⟨+i|) − (1+i)/2 (E(|0⟩⟨0|) + E(|1⟩⟨1|)).
ComplexMatrix choi_from_outputs(const std::array<ComplexMatrix, 4>& outputs);

/// Projection, eigendecomposition, Kraus extraction and unitary
/// reconstruction from the raw output Bloch vectors.
ProcessTomographyResult process_from_outputs(const std::array<Vec3, 4>& output_bloch);

/// 12-circuit process tomography of a single-qubit gate list.
ProcessTomographyResult process_tomography(const std::vector<GateOp>& channel, std::uint64_t shots,
                                           const NoiseModel& noise, std::uint64_t seed,
                                           bool mitigate = false);

/// Process tomography of the five-gate rotation circuit for `spec`.
ProcessTomographyResult process_tomography(const RotationSpec& spec, std::uint64_t shots,
                                           const NoiseModel& noise, std::uint64_t seed,
                                           bool mitigate = false);

/// Σ Kᵢ† Kᵢ
ComplexMatrix kraus_completeness(const std::vector<KrausOperator>& kraus);

/// Unitary factor V of the polar decomposition K = V P. Null directions of a
/// rank-deficient K are completed arbitrarily; NumericError when K = 0.
ComplexMatrix polar_unitary(const ComplexMatrix& k);

/// |Tr(U†V)|² / 4. ShapeError unless both are 2x2; DomainError when either is
/// further than 1e-3 from unitary.
double gate_fidelity(const ComplexMatrix& u_exact, const ComplexMatrix& u_rec);

/// Euler-Rodrigues parameters of the unitary recovered by process tomography.
ErParams erp_from_tomography(const RotationSpec& spec, std::uint64_t shots, const NoiseModel& noise,
                             std::uint64_t seed, bool mitigate = false);

}  // namespace qrot
