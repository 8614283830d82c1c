// Copyright 2026 The catcsum Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "catcsum/core/states.hpp"

namespace catcsum {

// F = sqrt(<psi|rho|psi>), clamped to [0, 1]. Throws invalid_state when the
// inner value is below -1e-8.
double fidelity(const PureState& psi, const DensityMatrix& rho);
// Pure-pure special case: |<psi|phi>|.
double fidelity(const PureState& psi, const PureState& phi);

// e^{i theta n} on the cavity factor.
CavityState rotate_cavity_phase(const CavityState& state, double theta);
PureState rotate_cavity_phase(const PureState& state, double theta);
DensityMatrix rotate_cavity_phase(const DensityMatrix& state, double theta);

}  // namespace catcsum
