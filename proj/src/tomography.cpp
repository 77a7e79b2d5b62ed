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

#include "qrot/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "qrot/rng.hpp"

namespace qrot {

namespace {

constexpr double kPsdTolerance = 1e-9;
constexpr double kKrausWeightFloor = 1e-12;
constexpr std::array<PauliBasis, 3> kBases = {PauliBasis::X, PauliBasis::Y, PauliBasis::Z};

void require_shots(std::uint64_t shots) {
  if (shots < kMinTomographyShots) {
    throw DomainError("tomography needs at least " + std::to_string(kMinTomographyShots) +
                      " shots per circuit, got " + std::to_string(shots));
  }
}

std::uint64_t calibration_seed(std::uint64_t seed) {
  return rng::derive(seed, rng::tag_of("readout-calibration"));
}

double measured_expectation(const ShotResult& r, unsigned qubit, const CalibrationMatrix* cal) {
  if (cal == nullptr) return expectation_from_counts(r, qubit);
  const std::vector<double> p = mitigate_counts(marginal(r, qubit), *cal);
  return p[0] - p[1];
}

ComplexMatrix reassemble(const HermitianEigensystem& eig, const std::vector<double>& values) {
  const std::size_t n = values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (values[k] == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * values[k];
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace

DensityMatrix::DensityMatrix(ComplexMatrix rho) : rho_(std::move(rho)) {
  if (rho_.rows() != 2 || rho_.cols() != 2) throw ShapeError("density matrix must be 2x2");
  if (hermiticity_error(rho_) > 1e-9) throw DomainError("density matrix must be Hermitian");
  if (std::abs(trace(rho_) - Complex(1.0)) > 1e-9) throw DomainError("density matrix trace must be 1");
  if (eig_hermitian(rho_).values.back() < -kPsdTolerance) {
    throw DomainError("density matrix has a negative eigenvalue");
  }
}

ComplexMatrix linear_inversion(Vec3 r) {
  ComplexMatrix m = pauli(0);
  m += Complex(r.x) * pauli(1);
  m += Complex(r.y) * pauli(2);
  m += Complex(r.z) * pauli(3);
  return Complex(0.5) * m;
}

ComplexMatrix smolin_project(const ComplexMatrix& m, double target_trace) {
  if (!(target_trace > 0.0)) throw DomainError("smolin_project: target trace must be positive");
  const Complex tr = trace(m);
  if (std::abs(tr - Complex(target_trace)) > 1e-9 * std::max(1.0, target_trace)) {
    throw DomainError("smolin_project: trace " + std::to_string(tr.real()) + " does not match " +
                      std::to_string(target_trace));
  }
  const HermitianEigensystem eig = eig_hermitian(m);
  std::vector<double> values = eig.values;
  for (double& v : values) v /= target_trace;

  std::size_t kept = values.size();
  double deficit = 0.0;
  while (kept > 0 && values[kept - 1] + deficit / static_cast<double>(kept) < 0.0) {
    deficit += values[kept - 1];
    values[kept - 1] = 0.0;
    --kept;
  }
  for (std::size_t i = 0; i < kept; ++i) values[i] += deficit / static_cast<double>(kept);
  for (double& v : values) v *= target_trace;
  return reassemble(eig, values);
}

DensityMatrix smolin_project(const ComplexMatrix& mu) {
  if (mu.rows() != 2 || mu.cols() != 2) throw ShapeError("smolin_project expects a 2x2 matrix");
  return DensityMatrix(smolin_project(mu, 1.0));
}

StateTomographyResult state_from_expectations(Vec3 expectations,
                                              std::array<std::uint64_t, 3> samples) {
  DensityMatrix rho = smolin_project(linear_inversion(expectations));
  const HermitianEigensystem eig = eig_hermitian(rho.matrix());
  const Vec3 dominant = state_to_bloch(StateVector::normalized(column(eig.vectors, 0)));
  return {expectations, std::move(rho), dominant, samples};
}

StateTomographyResult state_tomography(const Circuit& circuit, unsigned data_qubit,
                                       std::uint64_t shots, const NoiseModel& noise,
                                       std::uint64_t seed, bool mitigate) {
  require_shots(shots);
  if (data_qubit >= circuit.num_qubits()) throw DomainError("data qubit outside the circuit");
  std::optional<CalibrationMatrix> cal;
  if (mitigate) cal = calibrate_readout(noise, shots, calibration_seed(seed), 1);

  std::array<double, 3> e{};
  for (std::size_t b = 0; b < kBases.size(); ++b) {
    std::vector<PauliBasis> basis(circuit.num_qubits(), PauliBasis::Z);
    basis[data_qubit] = kBases[b];
    const ShotResult r = sample(circuit, basis, shots, noise, rng::derive(seed, b));
    e[b] = measured_expectation(r, data_qubit, cal ? &*cal : nullptr);
  }
  return state_from_expectations({e[0], e[1], e[2]}, {shots, shots, shots});
}

std::vector<GateOp> prepare_input(ProcessInput input) {
  switch (input) {
    case ProcessInput::Zero: return {};
    case ProcessInput::One: return {x(0)};
    case ProcessInput::Plus: return {h(0)};
    case ProcessInput::PlusI: return {h(0), rz(std::numbers::pi / 2.0, 0)};
  }
  return {};
}

ComplexMatrix choi_from_outputs(const std::array<ComplexMatrix, 4>& outputs) {
  const Complex i(0.0, 1.0);
  const ComplexMatrix& e00 = outputs[0];
  const ComplexMatrix& e11 = outputs[1];
  const ComplexMatrix e01 = outputs[2] + i * outputs[3] - Complex(0.5, 0.5) * (e00 + e11);
  const ComplexMatrix e10 = e01.adjoint();
  const std::array<const ComplexMatrix*, 4> blocks = {&e00, &e01, &e10, &e11};

  ComplexMatrix choi(4, 4);
  for (std::size_t in_r = 0; in_r < 2; ++in_r) {
    for (std::size_t in_c = 0; in_c < 2; ++in_c) {
      const ComplexMatrix& block = *blocks[2 * in_r + in_c];
      for (std::size_t o_r = 0; o_r < 2; ++o_r) {
        for (std::size_t o_c = 0; o_c < 2; ++o_c) choi(2 * in_r + o_r, 2 * in_c + o_c) = block(o_r, o_c);
      }
    }
  }
  return choi;
}

ProcessTomographyResult process_from_outputs(const std::array<Vec3, 4>& output_bloch) {
  std::array<ComplexMatrix, 4> outputs;
  for (std::size_t k = 0; k < 4; ++k) outputs[k] = linear_inversion(output_bloch[k]);

  ProcessTomographyResult result;
  result.output_bloch = output_bloch;
  result.choi_raw = choi_from_outputs(outputs);
  result.choi = smolin_project(result.choi_raw, 2.0);

  const HermitianEigensystem eig = eig_hermitian(result.choi);
  result.choi_eigenvalues = eig.values;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    const double s = eig.values[k];
    if (s <= kKrausWeightFloor) continue;
    // Component 2i + o of the eigenvector is K(o, i).
    const double scale = std::sqrt(s);
    ComplexMatrix op(2, 2);
    for (std::size_t in = 0; in < 2; ++in) {
      for (std::size_t o = 0; o < 2; ++o) op(o, in) = scale * eig.vectors(2 * in + o, k);
    }
    result.kraus.push_back({std::move(op), s});
  }
  if (result.kraus.empty()) throw NumericError("process tomography produced an empty Choi matrix");
  result.unitary = polar_unitary(result.kraus.front().op);
  result.degenerate = eig.values[1] > 0.1 && eig.values[0] - eig.values[1] < 1e-6;
  return result;
}

ProcessTomographyResult process_tomography(const std::vector<GateOp>& channel, std::uint64_t shots,
                                           const NoiseModel& noise, std::uint64_t seed,
                                           bool mitigate) {
  require_shots(shots);
  std::optional<CalibrationMatrix> cal;
  if (mitigate) cal = calibrate_readout(noise, shots, calibration_seed(seed), 1);

  std::array<Vec3, 4> outputs;
  for (std::size_t k = 0; k < kProcessInputs.size(); ++k) {
    Circuit c(1);
    c.append(prepare_input(kProcessInputs[k]));
    c.append(channel);
    std::array<double, 3> e{};
    for (std::size_t b = 0; b < kBases.size(); ++b) {
      const std::array<PauliBasis, 1> basis = {kBases[b]};
      const ShotResult r = sample(c, basis, shots, noise, rng::derive(rng::derive(seed, k), b));
      e[b] = measured_expectation(r, 0, cal ? &*cal : nullptr);
    }
    outputs[k] = {e[0], e[1], e[2]};
  }
  return process_from_outputs(outputs);
}

ProcessTomographyResult process_tomography(const RotationSpec& spec, std::uint64_t shots,
                                           const NoiseModel& noise, std::uint64_t seed,
                                           bool mitigate) {
  return process_tomography(axis_rotation_sequence(spec), shots, noise, seed, mitigate);
}

ComplexMatrix kraus_completeness(const std::vector<KrausOperator>& kraus) {
  ComplexMatrix sum(2, 2);
  for (const KrausOperator& k : kraus) sum += matmul(k.op.adjoint(), k.op);
  return sum;
}

ComplexMatrix polar_unitary(const ComplexMatrix& k) {
  if (!k.is_square()) throw ShapeError("polar_unitary expects a square matrix");
  const std::size_t n = k.rows();
  const HermitianEigensystem eig = eig_hermitian(matmul(k.adjoint(), k));
  const double floor = 1e-24 * std::max(1.0, eig.values.front());
  if (!(eig.values.front() > floor)) throw NumericError("polar_unitary: zero operator");

  // Left singular vectors u_j = K v_j / σ_j; null directions are completed by
  // Gram-Schmidt against the standard basis.
  std::vector<std::vector<Complex>> left;
  for (std::size_t j = 0; j < n; ++j) {
    if (eig.values[j] <= floor) break;
    const std::vector<Complex> v = column(eig.vectors, j);
    std::vector<Complex> u(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) u[r] += k(r, c) * v[c];
    }
    const double s = std::sqrt(eig.values[j]);
    for (Complex& z : u) z /= s;
    left.push_back(std::move(u));
  }
  for (std::size_t e = 0; left.size() < n && e < n; ++e) {
    std::vector<Complex> u(n);
    u[e] = 1.0;
    for (const auto& w : left) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < n; ++r) proj += std::conj(w[r]) * u[r];
      for (std::size_t r = 0; r < n; ++r) u[r] -= proj * w[r];
    }
    double len = 0.0;
    for (const Complex& z : u) len += std::norm(z);
    if (len < 1e-12) continue;
    for (Complex& z : u) z /= std::sqrt(len);
    left.push_back(std::move(u));
  }
  ComplexMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) out(r, c) += left[j][r] * std::conj(eig.vectors(c, j));
    }
  }
  return out;
}

double gate_fidelity(const ComplexMatrix& u_exact, const ComplexMatrix& u_rec) {
  if (u_exact.rows() != 2 || u_exact.cols() != 2 || u_rec.rows() != 2 || u_rec.cols() != 2) {
    throw ShapeError("gate_fidelity expects two 2x2 matrices");
  }
  if (unitarity_error(u_exact) > 1e-3 || unitarity_error(u_rec) > 1e-3) {
    throw DomainError("gate_fidelity expects unitary inputs");
  }
  const double overlap = std::abs(trace(matmul(u_exact.adjoint(), u_rec)));
  return std::min(1.0, overlap * overlap / 4.0);
}

ErParams erp_from_tomography(const RotationSpec& spec, std::uint64_t shots, const NoiseModel& noise,
                             std::uint64_t seed, bool mitigate) {
  return erp_from_unitary(process_tomography(spec, shots, noise, seed, mitigate).unitary);
}

}  // namespace qrot
