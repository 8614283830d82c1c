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

#include "catcsum/model/collapse.hpp"

#include <cmath>

namespace catcsum::model {

std::vector<CollapseChannel> collapse_operators(const DecoherenceParams& dec, SystemDims dims) {
  dec.validate();
  std::vector<CollapseChannel> out;
  auto add = [&](std::string name, double rate, const Operator& op) {
    if (rate == 0.0) return;
    out.push_back({std::move(name), rate, op.scaled(std::sqrt(rate))});
  };
  add("cavity_decay", dec.kappa, annihilation(dims));
  add("relax_b_to_0", dec.gamma_0b, ququart_transition(Level::zero, Level::b, dims));
  add("relax_b_to_1", dec.gamma_1b, ququart_transition(Level::one, Level::b, dims));
  add("relax_b_to_2", dec.gamma_2b, ququart_transition(Level::two, Level::b, dims));
  add("relax_2_to_0", dec.gamma_02, ququart_transition(Level::zero, Level::two, dims));
  add("relax_2_to_1", dec.gamma_12, ququart_transition(Level::one, Level::two, dims));
  add("relax_0_to_1", dec.gamma_01, ququart_transition(Level::one, Level::zero, dims));
  add("dephase_0", dec.gamma_phi_0, ququart_projector(Level::zero, dims));
  add("dephase_2", dec.gamma_phi_2, ququart_projector(Level::two, dims));
  add("dephase_b", dec.gamma_phi_b, ququart_projector(Level::b, dims));
  return out;
}

std::vector<Operator> collapse_matrices(const std::vector<CollapseChannel>& channels) {
  std::vector<Operator> ops;
  ops.reserve(channels.size());
  for (const auto& c : channels) ops.push_back(c.op);
  return ops;
}

}  // namespace catcsum::model
