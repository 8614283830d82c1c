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
#include <string>

#include "catcsum/core/states.hpp"

namespace catcsum::protocol {

// |control, target>: control is the superconducting-qutrit level, target the
// cat-codeword index. Both in {0, 1, 2}.
struct HybridBasisLabel {
  int control = 0;
  int target = 0;

  HybridBasisLabel() = default;
  HybridBasisLabel(int control, int target);  // throws invalid_argument out of range

  std::string str() const;  // e.g. "|12>"
  friend bool operator==(const HybridBasisLabel&, const HybridBasisLabel&) = default;
};

std::array<HybridBasisLabel, 9> all_labels();

// Controlled-SUM truth table: (c, k) -> (c, (k + c) mod 3).
HybridBasisLabel csum_target(HybridBasisLabel label);

// |control> (x) cat_codeword(target, alpha).
PureState hybrid_basis_state(HybridBasisLabel label, Complex alpha, SystemDims dims);

}  // namespace catcsum::protocol
