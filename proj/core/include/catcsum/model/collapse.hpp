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

#include <string>
#include <vector>

#include "catcsum/core/operators.hpp"
#include "catcsum/model/device.hpp"

namespace catcsum::model {

struct CollapseChannel {
  std::string name;
  double rate;  // 1/us
  Operator op;  // already scaled by sqrt(rate)
};

// Cavity decay sqrt(kappa) a; relaxation sqrt(gamma_jb)|j><b| (j = 0,1,2),
// sqrt(gamma_j2)|j><2| (j = 0,1), sqrt(gamma_01)|1><0|; dephasing
// sqrt(gamma_phi_j)|j><j| (j = 0,2,b). The dephasing term
// gamma (s rho s - s rho/2 - rho s/2) with a projector s equals the standard
// dissipator of sqrt(gamma) s, so every channel shares one code path.
// Zero-rate channels are omitted.
std::vector<CollapseChannel> collapse_operators(const DecoherenceParams& dec, SystemDims dims);

std::vector<Operator> collapse_matrices(const std::vector<CollapseChannel>& channels);

}  // namespace catcsum::model
