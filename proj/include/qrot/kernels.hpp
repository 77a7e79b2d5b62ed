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
#include <span>
#include <string_view>

#include "qrot/linalg.hpp"

/// Statevector inner loops.
///
/// Every kernel has a portable scalar reference and, on x86-64 builds, an
/// AVX2 variant. The dispatching entry points pick the AVX2 variant when the
/// running CPU reports AVX2 and FMA; tests pin either variant and compare.
namespace qrot::kernels {

/// Row-major 2x2 complex matrix.
struct Mat2 {
  Complex m00, m01, m10, m11;

  static Mat2 from(const ComplexMatrix& m);
};

/// Applies m to the target qubit on every amplitude pair whose index satisfies
/// (index & ctrl_mask) == ctrl_value. ctrl_mask must not include the target
/// bit; ctrl_value must be a subset of ctrl_mask.
using Apply1qFn = void (*)(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
                           std::uint64_t ctrl_value, const Mat2& m);
/// out[i] = |amps[i]|²; out.size() == amps.size().
using ProbabilitiesFn = void (*)(std::span<const Complex> amps, std::span<double> out);

void apply_1q_scalar(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
                     std::uint64_t ctrl_value, const Mat2& m);
void probabilities_scalar(std::span<const Complex> amps, std::span<double> out);

#if defined(QROT_HAVE_AVX2)
void apply_1q_avx2(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
                   std::uint64_t ctrl_value, const Mat2& m);
void probabilities_avx2(std::span<const Complex> amps, std::span<double> out);
#endif

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);

/// True when the AVX2 variants were compiled in and the CPU supports them.
bool avx2_available();

/// The variant the dispatchers currently use.
Isa active_isa();

/// Pins the dispatchers to `isa`; DomainError if it is not available.
/// Intended for tests and benchmarks.
void set_isa(Isa isa);

/// Restores automatic selection.
void reset_isa();

void apply_1q(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
              std::uint64_t ctrl_value, const Mat2& m);
void probabilities(std::span<const Complex> amps, std::span<double> out);

}  // namespace qrot::kernels
