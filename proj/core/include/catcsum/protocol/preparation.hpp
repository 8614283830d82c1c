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

#include <array>

#include "catcsum/core/states.hpp"

namespace catcsum::protocol {

// Resonant classical pulse on one ququart transition, applied as the ideal
// rotation exp(-i tau Omega (e^{i phi}|from><to| + e^{-i phi}|to><from|)).
struct PulseSpec {
  Level from = Level::zero;
  Level to = Level::one;
  double rabi_frequency = 0.0;  // Omega, rad/us
  double phase = 0.0;           // phi, rad
  double duration = 0.0;        // tau, us
};

QuquartMatrix pulse_rotation(const PulseSpec& pulse);

struct ControlPreparation {
  std::array<PulseSpec, 2> pulses;
  QuquartVector after_first_pulse;
  QuquartVector state;  // (|0> + |1> + |2>)/sqrt(3)
};

// Two phase -pi/2 pulses from |0>: 0<->1 for tau = arccos(1/sqrt(3))/Omega_1,
// then 1<->2 for tau = (pi/4)/Omega_2. Rabi frequencies only set the recorded
// durations; the rotations are exact.
ControlPreparation prepare_control_superposition(double rabi_1 = 2.0 * 3.14159265358979323846 * 20.0,
                                                 double rabi_2 = 2.0 * 3.14159265358979323846 * 20.0);

// Imperfectly prepared input
//   N1^-1 [(1/sqrt3 + d)|0> + 1/sqrt3 |1> + (1/sqrt3 - d)|2>]
//     (x) N2 (sqrt(1 + d)|alpha> + sqrt(1 - d)|-alpha>),
// renormalized numerically after truncation. delta = 0 gives the ideal input
// (|0> + |1> + |2>)/sqrt(3) (x) cat_codeword(0). Throws for |delta| >= 1.
PureState initial_state(double delta, Complex alpha, SystemDims dims);

// (|0,0> + |1,1> + |2,2>)/sqrt(3) in the hybrid basis, renormalized.
PureState target_entangled_state(Complex alpha, SystemDims dims);

}  // namespace catcsum::protocol
