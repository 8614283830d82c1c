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

#include "catcsum/core/operators.hpp"
#include "catcsum/dynamics/time_dependent_operator.hpp"
#include "catcsum/model/device.hpp"

namespace catcsum::model {

// Interaction-picture Hamiltonian with the two gate couplings only (RWA):
//   g_1b (e^{i Delta_1b t} a |b><1| + h.c.) + g_2b (e^{i Delta_2b t} a |b><2| + h.c.)
dynamics::TimeDependentOperator hamiltonian_rwa(const DeviceParams& params, SystemDims dims);

struct FullTermSelection {
  bool counter_rotating = true;    // a^+ terms at omega_c + omega_xy
  bool unwanted_couplings = true;  // 0b, 01, 02, 12
};

// All six transition couplings without the rotating-wave approximation: each
// transition contributes a co-rotating term at Delta_xy and a counter-rotating
// term at omega_c + omega_xy, both with their Hermitian conjugates. Terms with
// zero coupling are omitted.
dynamics::TimeDependentOperator hamiltonian_full(const DeviceParams& params, SystemDims dims,
                                                 FullTermSelection selection = {});

// Dispersive Hamiltonian, diagonal in the level (x) Fock basis.
//   include_b:  -l1 (a^+a |1><1| - a a^+ |b><b|) - l2 (a^+a |2><2| - a a^+ |b><b|)
//   otherwise:  -l1 a^+a |1><1| - l2 a^+a |2><2|
Operator hamiltonian_effective(const DispersiveShifts& shifts, SystemDims dims, bool include_b);

}  // namespace catcsum::model
