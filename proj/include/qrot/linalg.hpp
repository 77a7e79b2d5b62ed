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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qrot/errors.hpp"

namespace qrot {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major order.
///
/// Sized for the objects this project handles: 2x2 gates, 4x4 Choi matrices
/// and the occasional 2^k operator used in tests. There is no sparsity.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws ShapeError when entries.size() != rows * cols and DomainError on
  /// non-finite entries.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return entries_; }

  ComplexMatrix adjoint() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
Complex trace(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// max |a_ij - b_ij|; ShapeError on mismatched dimensions.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// ‖M†M − I‖_max
double unitarity_error(const ComplexMatrix& m);
/// ‖M − M†‖_max
double hermiticity_error(const ComplexMatrix& m);

/// Pauli matrix σ_k for k in {0,1,2,3} (σ_0 = I, then X, Y, Z).
const ComplexMatrix& pauli(int k);
inline const ComplexMatrix& pauli_x() { return pauli(1); }
inline const ComplexMatrix& pauli_y() { return pauli(2); }
inline const ComplexMatrix& pauli_z() { return pauli(3); }

struct HermitianEigensystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column j pairs with values[j]
};

/// Cyclic complex Jacobi eigendecomposition of a Hermitian matrix.
///
/// The input must satisfy ‖M − M†‖_max ≤ 1e-8 (DomainError otherwise); it is
/// symmetrized before iterating. Sweeps stop once every off-diagonal entry is
/// below 1e-12 (relative to the Frobenius norm when that exceeds one); more
/// than 100 sweeps raises NumericError. Each eigenvector is phase-fixed so its
/// largest-magnitude component is real and positive.
HermitianEigensystem eig_hermitian(const ComplexMatrix& m);

/// Column j of m as a vector.
std::vector<Complex> column(const ComplexMatrix& m, std::size_t j);

/// Pure state on num_qubits qubits, qubit 0 being the least-significant bit of
/// the amplitude index.
class StateVector {
 public:
  /// |0...0⟩
  explicit StateVector(unsigned num_qubits);
  /// Throws ShapeError unless the length is a power of two and DomainError
  /// unless the norm is 1 within 1e-10.
  explicit StateVector(std::vector<Complex> amplitudes);

  /// Computational basis state |index⟩.
  static StateVector basis(unsigned num_qubits, std::size_t index);
  /// Rescales to unit norm; DomainError on a zero vector.
  static StateVector normalized(std::vector<Complex> amplitudes);

  unsigned num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  /// Mutable view for in-place unitary kernels; callers keep the norm intact.
  std::span<Complex> mutable_amplitudes() { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;

 private:
  StateVector(unsigned num_qubits, std::vector<Complex> amplitudes, int);

  unsigned num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// m·ψ for a matrix of matching dimension.
StateVector apply_matrix(const ComplexMatrix& m, const StateVector& psi);

}  // namespace qrot
