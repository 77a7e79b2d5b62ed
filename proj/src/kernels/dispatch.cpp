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

#include <atomic>
#include <string>

#include "qrot/kernels.hpp"

namespace qrot::kernels {

namespace {

Isa detect() { return avx2_available() ? Isa::Avx2 : Isa::Scalar; }

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(QROT_HAVE_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::Avx2 && !avx2_available()) {
    throw DomainError("AVX2 kernels are not available on this build or CPU");
  }
  current().store(isa, std::memory_order_relaxed);
}

void reset_isa() { current().store(detect(), std::memory_order_relaxed); }

void apply_1q(std::span<Complex> amps, unsigned target, std::uint64_t ctrl_mask,
              std::uint64_t ctrl_value, const Mat2& m) {
#if defined(QROT_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    apply_1q_avx2(amps, target, ctrl_mask, ctrl_value, m);
    return;
  }
#endif
  apply_1q_scalar(amps, target, ctrl_mask, ctrl_value, m);
}

void probabilities(std::span<const Complex> amps, std::span<double> out) {
  if (out.size() != amps.size()) throw ShapeError("probabilities: output size mismatch");
#if defined(QROT_HAVE_AVX2)
  if (active_isa() == Isa::Avx2) {
    probabilities_avx2(amps, out);
    return;
  }
#endif
  probabilities_scalar(amps, out);
}

}  // namespace qrot::kernels
