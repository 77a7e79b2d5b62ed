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

#include "qrot/linalg.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace qrot {

namespace {

void require_finite(std::span<const Complex> entries) {
  for (const Complex& z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("non-finite matrix entry");
    }
  }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                     std::to_string(b.cols()));
  }
}

constexpr int kMaxJacobiSweeps = 100;
constexpr double kJacobiThreshold = 1e-12;
constexpr double kHermitianTolerance = 1e-8;

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw ShapeError("ComplexMatrix: " + std::to_string(entries_.size()) + " entries for " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  }
  require_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (Complex& z : entries_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Complex trace(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("trace of a non-square matrix");
  Complex t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  }
  return worst;
}

double unitarity_error(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("unitarity check on a non-square matrix");
  return max_abs_diff(matmul(m.adjoint(), m), ComplexMatrix::identity(m.rows()));
}

double hermiticity_error(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("hermiticity check on a non-square matrix");
  return max_abs_diff(m, m.adjoint());
}

const ComplexMatrix& pauli(int k) {
  using namespace std::complex_literals;
  static const std::array<ComplexMatrix, 4> kPaulis = {
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, 1.0}),
      ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}),
      ComplexMatrix(2, 2, {0.0, -1i, 1i, 0.0}),
      ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}),
  };
  if (k < 0 || k > 3) throw DomainError("pauli index must be 0..3, got " + std::to_string(k));
  return kPaulis[static_cast<std::size_t>(k)];
}

HermitianEigensystem eig_hermitian(const ComplexMatrix& m) {
  if (!m.is_square()) throw ShapeError("eig_hermitian: non-square input");
  const double herm_err = hermiticity_error(m);
  if (herm_err > kHermitianTolerance) {
    throw DomainError("eig_hermitian: input is not Hermitian (‖M − M†‖_max = " +
                      std::to_string(herm_err) + ")");
  }
  const std::size_t n = m.rows();
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  ComplexMatrix q = ComplexMatrix::identity(n);

  double frob = 0.0;
  for (const Complex& z : h.entries()) frob += std::norm(z);
  const double threshold = kJacobiThreshold * std::max(1.0, std::sqrt(frob));

  auto max_off_diagonal = [&] {
    double worst = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) worst = std::max(worst, std::abs(h(p, r)));
    }
    return worst;
  };

  // Past the threshold, up to two extra sweeps push residuals to roundoff.
  const double polish = 1e-15 * std::max(1.0, std::sqrt(frob));
  int sweep = 0;
  int extra = 0;
  while (true) {
    const double off = max_off_diagonal();
    if (off <= polish) break;
    if (off <= threshold && extra++ >= 2) break;
    if (sweep++ >= kMaxJacobiSweeps) {
      throw NumericError("eig_hermitian: no convergence after " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t r = p + 1; r < n; ++r) {
        const Complex hpr = h(p, r);
        const double mag = std::abs(hpr);
        if (mag == 0.0) continue;
        const double app = h(p, p).real();
        const double arr = h(r, r).real();
        // Phase the (p, r) entry real, then a real Jacobi rotation zeroes it.
        const Complex phase = std::conj(hpr) / mag;
        const double angle = 0.5 * std::atan2(2.0 * mag, arr - app);
        const double c = std::cos(angle);
        const double s = std::sin(angle);
        const Complex vpp = c, vpr = s, vrp = -s * phase, vrr = c * phase;

        for (std::size_t k = 0; k < n; ++k) {
          const Complex hp = h(k, p), hr = h(k, r);
          h(k, p) = hp * vpp + hr * vrp;
          h(k, r) = hp * vpr + hr * vrr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex hp = h(p, k), hr = h(r, k);
          h(p, k) = std::conj(vpp) * hp + std::conj(vrp) * hr;
          h(r, k) = std::conj(vpr) * hp + std::conj(vrr) * hr;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex qp = q(k, p), qr = q(k, r);
          q(k, p) = qp * vpp + qr * vrp;
          q(k, r) = qp * vpr + qr * vrr;
        }
        h(p, r) = 0.0;
        h(r, p) = 0.0;
        h(p, p) = h(p, p).real();
        h(r, r) = h(r, r).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return h(i, i).real() > h(j, j).real(); });

  HermitianEigensystem out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.values[j] = h(src, src).real();
    std::size_t pivot = 0;
    for (std::size_t k = 1; k < n; ++k) {
      if (std::abs(q(k, src)) > std::abs(q(pivot, src)) + 1e-14) pivot = k;
    }
    const Complex fix = std::abs(q(pivot, src)) > 0 ? std::conj(q(pivot, src)) / std::abs(q(pivot, src))
                                                    : Complex{1.0};
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, j) = q(k, src) * fix;
  }
  return out;
}

std::vector<Complex> column(const ComplexMatrix& m, std::size_t j) {
  if (j >= m.cols()) throw ShapeError("column index out of range");
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m(i, j);
  return out;
}

// --- StateVector ---

StateVector::StateVector(unsigned num_qubits, std::vector<Complex> amplitudes, int)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector::StateVector(unsigned num_qubits)
    : num_qubits_(num_qubits), amplitudes_(std::size_t{1} << num_qubits) {
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty() || !std::has_single_bit(amplitudes_.size())) {
    throw ShapeError("StateVector: length " + std::to_string(amplitudes_.size()) +
                     " is not a power of two");
  }
  require_finite(amplitudes_);
  num_qubits_ = static_cast<unsigned>(std::countr_zero(amplitudes_.size()));
  const double n2 = norm() * norm();
  if (std::abs(n2 - 1.0) > 1e-10) {
    throw DomainError("StateVector: squared norm " + std::to_string(n2) + " is not 1");
  }
}

StateVector StateVector::basis(unsigned num_qubits, std::size_t index) {
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  if (index >= amps.size()) throw ShapeError("basis index out of range");
  amps[index] = 1.0;
  return StateVector(num_qubits, std::move(amps), 0);
}

StateVector StateVector::normalized(std::vector<Complex> amplitudes) {
  double n2 = 0.0;
  for (const Complex& z : amplitudes) n2 += std::norm(z);
  if (!(n2 > 0.0) || !std::isfinite(n2)) throw DomainError("cannot normalize a zero state");
  const double inv = 1.0 / std::sqrt(n2);
  for (Complex& z : amplitudes) z *= inv;
  return StateVector(std::move(amplitudes));
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const Complex& z : amplitudes_) n2 += std::norm(z);
  return std::sqrt(n2);
}

StateVector apply_matrix(const ComplexMatrix& m, const StateVector& psi) {
  if (m.cols() != psi.dim() || m.rows() != psi.dim()) {
    throw ShapeError("apply_matrix: operator does not match state dimension");
  }
  std::vector<Complex> out(psi.dim());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Complex acc{};
    for (std::size_t k = 0; k < m.cols(); ++k) acc += m(i, k) * psi[k];
    out[i] = acc;
  }
  return StateVector(std::move(out));
}

}  // namespace qrot
