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

#include "catcsum/protocol/gate.hpp"

#include "catcsum/core/cat.hpp"
#include "catcsum/error.hpp"

namespace catcsum::protocol {

HybridBasisLabel::HybridBasisLabel(int control_level, int target_index)
    : control(control_level), target(target_index) {
  if (control < 0 || control > 2 || target < 0 || target > 2) {
    throw Error(ErrorCode::invalid_argument, "hybrid basis label entries must be in {0,1,2}");
  }
}

std::string HybridBasisLabel::str() const {
  return "|" + std::to_string(control) + std::to_string(target) + ">";
}

std::array<HybridBasisLabel, 9> all_labels() {
  std::array<HybridBasisLabel, 9> out;
  for (int c = 0; c < 3; ++c) {
    for (int k = 0; k < 3; ++k) out[3 * c + k] = HybridBasisLabel(c, k);
  }
  return out;
}

HybridBasisLabel csum_target(HybridBasisLabel label) {
  return HybridBasisLabel(label.control, (label.target + label.control) % 3);
}

PureState hybrid_basis_state(HybridBasisLabel label, Complex alpha, SystemDims dims) {
  QuquartVector q = QuquartVector::Zero();
  q(label.control) = 1.0;
  return PureState::product(q, cat_codeword(label.target, alpha, dims.fock_cutoff()));
}

}  // namespace catcsum::protocol
