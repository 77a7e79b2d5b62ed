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

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qrot/simulator.hpp"

namespace qrot {

/// Column-stochastic readout confusion matrix: entry (r, c) is the probability
/// of reading outcome r after preparing basis state c.
class CalibrationMatrix {
 public:
  /// DomainError unless entries lie in [0, 1] and every column sums to 1
  /// within 1e-9; ShapeError unless dim is a power of two matching the data.
  CalibrationMatrix(std::size_t dim, std::vector<double> entries);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }
  /// Ratio of the largest to the smallest singular value.
  double condition_number() const;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
};

/// Prepares each of the 2^m basis states with X gates, measures it `shots`
/// times in Z under `noise`, and stores the observed frequencies as columns.
CalibrationMatrix calibrate_readout(const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                                    unsigned num_qubits);

/// Outcome frequencies of `result`, corrected by solving cal · p = f with
/// nonnegative least squares, clipped at 0 and renormalized to sum 1.
/// NumericError when the calibration's condition number exceeds 1e8.
std::vector<double> mitigate_counts(const ShotResult& result, const CalibrationMatrix& cal);

/// Lawson-Hanson active-set solver for min ‖A x − b‖₂ subject to x ≥ 0, with A
/// given row-major as rows × cols.
std::vector<double> nnls(const std::vector<double>& a, std::size_t rows, std::size_t cols,
                         const std::vector<double>& b);

/// Marginal counts of a single qubit, as a one-qubit ShotResult.
ShotResult marginal(const ShotResult& result, unsigned qubit);

}  // namespace qrot
