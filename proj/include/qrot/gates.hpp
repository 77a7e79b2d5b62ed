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

#include "qrot/linalg.hpp"

namespace qrot {

/// exp(−iXθ/2)
ComplexMatrix gate_rx(double theta);
/// exp(−iYθ/2)
ComplexMatrix gate_ry(double theta);
/// exp(−iZθ/2) = diag(e^{−iθ/2}, e^{iθ/2})
ComplexMatrix gate_rz(double theta);
ComplexMatrix gate_h();
ComplexMatrix gate_x();

}  // namespace qrot
