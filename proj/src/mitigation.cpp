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

#include "qrot/mitigation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qrot/rng.hpp"

namespace qrot {

namespace {

constexpr double kMaxCondition = 1e8;

// Solves the square system m x = rhs by Gaussian elimination with partial
// pivoting; m is row-major n × n.
std::vector<double> solve_dense(std::vector<double> m, std::vector<double> rhs, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    }
    if (std::abs(m[pivot * n + col]) < 1e-300) throw NumericError("singular least-squares system");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[col * n + c], m[pivot * n + c]);
      std::swap(rhs[col], rhs[pivot]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= m[i * n + c] * x[c];
    x[i] = acc / m[i * n + i];
  }
  return x;
}

// Unconstrained least squares restricted to the columns in `passive`.
std::vector<double> restricted_lstsq(const std::vector<double>& a, std::size_t rows, std::size_t cols,
                                     const std::vector<double>& b, const std::vector<std::size_t>& passive) {
  const std::size_t k = passive.size();
  std::vector<double> normal(k * k), rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < rows; ++r) acc += a[r * cols + passive[i]] * a[r * cols + passive[j]];
      normal[i * k + j] = acc;
    }
    double acc = 0.0;
    for (std::size_t r = 0; r < rows; ++r) acc += a[r * cols + passive[i]] * b[r];
    rhs[i] = acc;
  }
  const std::vector<double> z = solve_dense(std::move(normal), std::move(rhs), k);
  std::vector<double> out(cols, 0.0);
  for (std::size_t i = 0; i < k; ++i) out[passive[i]] = z[i];
  return out;
}

}  // namespace

CalibrationMatrix::CalibrationMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0 || !std::has_single_bit(dim) || entries_.size() != dim * dim) {
    throw ShapeError("calibration matrix must be 2^m x 2^m");
  }
  for (double v : entries_) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("calibration entries must lie in [0, 1]");
  }
  for (std::size_t c = 0; c < dim; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < dim; ++r) sum += (*this)(r, c);
    if (std::abs(sum - 1.0) > 1e-9) {
      throw DomainError("calibration column " + std::to_string(c) + " sums to " + std::to_string(sum));
    }
  }
}

double CalibrationMatrix::condition_number() const {
  ComplexMatrix gram(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      double acc = 0.0;
      for (std::size_t r = 0; r < dim_; ++r) acc += (*this)(r, i) * (*this)(r, j);
      gram(i, j) = acc;
    }
  }
  const HermitianEigensystem eig = eig_hermitian(gram);
  const double largest = eig.values.front();
  const double smallest = eig.values.back();
  if (!(smallest > 0.0)) return std::numeric_limits<double>::infinity();
  return std::sqrt(largest / smallest);
}

CalibrationMatrix calibrate_readout(const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                                    unsigned num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) throw DomainError("calibration needs 1..12 qubits");
  if (shots < 1) throw DomainError("calibration needs at least one shot");
  const std::size_t dim = std::size_t{1} << num_qubits;
  std::vector<double> entries(dim * dim);
  const std::vector<PauliBasis> basis(num_qubits, PauliBasis::Z);
  for (std::size_t prepared = 0; prepared < dim; ++prepared) {
    Circuit prep(num_qubits);
    for (unsigned q = 0; q < num_qubits; ++q) {
      if ((prepared >> q) & 1U) prep.add(x(q));
    }
    const ShotResult r = sample(prep, basis, shots, noise, rng::derive(seed, prepared));
    for (const auto& [outcome, n] : r.counts) {
      entries[outcome * dim + prepared] = static_cast<double>(n) / static_cast<double>(shots);
    }
  }
  return CalibrationMatrix(dim, std::move(entries));
}

std::vector<double> nnls(const std::vector<double>& a, std::size_t rows, std::size_t cols,
                         const std::vector<double>& b) {
  if (a.size() != rows * cols || b.size() != rows) throw ShapeError("nnls: dimension mismatch");
  constexpr double tol = 1e-12;
  std::vector<double> x(cols, 0.0);
  std::vector<bool> in_passive(cols, false);

  auto gradient = [&] {
    std::vector<double> resid(b);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) resid[r] -= a[r * cols + c] * x[c];
    }
    std::vector<double> w(cols, 0.0);
    for (std::size_t c = 0; c < cols; ++c) {
      for (std::size_t r = 0; r < rows; ++r) w[c] += a[r * cols + c] * resid[r];
    }
    return w;
  };

  const std::size_t max_outer = 3 * cols + 10;
  for (std::size_t outer = 0; outer < max_outer; ++outer) {
    const std::vector<double> w = gradient();
    std::size_t best = cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (!in_passive[c] && w[c] > tol && (best == cols || w[c] > w[best])) best = c;
    }
    if (best == cols) return x;
    in_passive[best] = true;

    for (std::size_t inner = 0; inner <= cols; ++inner) {
      std::vector<std::size_t> passive;
      for (std::size_t c = 0; c < cols; ++c) {
        if (in_passive[c]) passive.push_back(c);
      }
      const std::vector<double> s = restricted_lstsq(a, rows, cols, b, passive);
      bool feasible = true;
      for (std::size_t c : passive) feasible = feasible && s[c] > tol;
      if (feasible) {
        x = s;
        break;
      }
      double alpha = 1.0;
      for (std::size_t c : passive) {
        if (s[c] <= tol) alpha = std::min(alpha, x[c] / (x[c] - s[c]));
      }
      for (std::size_t c = 0; c < cols; ++c) x[c] += alpha * (s[c] - x[c]);
      for (std::size_t c : passive) {
        if (x[c] <= tol) {
          x[c] = 0.0;
          in_passive[c] = false;
        }
      }
    }
  }
  throw NumericError("nnls: no convergence");
}

std::vector<double> mitigate_counts(const ShotResult& result, const CalibrationMatrix& cal) {
  const std::size_t dim = std::size_t{1} << result.num_qubits;
  if (cal.dim() != dim) {
    throw ShapeError("mitigate_counts: calibration is " + std::to_string(cal.dim()) +
                     "-dimensional, counts cover " + std::to_string(dim) + " outcomes");
  }
  if (result.shots == 0) throw DomainError("mitigate_counts: no counts");
  const double cond = cal.condition_number();
  if (!(cond <= kMaxCondition)) {
    throw NumericError("calibration matrix is singular (condition number " + std::to_string(cond) + ")");
  }
  std::vector<double> observed(dim, 0.0);
  for (const auto& [outcome, n] : result.counts) {
    observed[outcome] = static_cast<double>(n) / static_cast<double>(result.shots);
  }
  std::vector<double> a(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) a[r * dim + c] = cal(r, c);
  }
  std::vector<double> p = nnls(a, dim, dim, observed);
  for (double& v : p) v = std::max(v, 0.0);
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (!(total > 0.0)) throw NumericError("mitigated distribution vanished");
  for (double& v : p) v /= total;
  return p;
}

ShotResult marginal(const ShotResult& result, unsigned qubit) {
  if (qubit >= result.num_qubits) throw DomainError("marginal: qubit out of range");
  ShotResult out{1, {result.basis.at(qubit)}, {}, result.shots};
  for (const auto& [outcome, n] : result.counts) out.counts[(outcome >> qubit) & 1U] += n;
  return out;
}

}  // namespace qrot
