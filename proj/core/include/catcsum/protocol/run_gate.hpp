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

#include <optional>
#include <string_view>
#include <variant>

#include "catcsum/core/states.hpp"
#include "catcsum/model/device.hpp"
#include "catcsum/model/hamiltonians.hpp"

namespace catcsum::protocol {

// effective_analytic: closed-form dispersive evolution.
// rwa / full:         Schrodinger RK4 under the two-coupling RWA or the full Hamiltonian.
// rwa_lindblad / full_lindblad: master equation with the collapse channels.
enum class GateMode { effective_analytic, rwa, full, rwa_lindblad, full_lindblad };

std::string_view to_string(GateMode mode);
GateMode gate_mode_from_string(std::string_view name);  // throws invalid_argument
bool is_open_system(GateMode mode);

struct GateRunOptions {
  double dt_scale = 1.0;
  int points_per_period = 20;
  int sample_every = 0;
  model::FullTermSelection selection{};
};

using GateState = std::variant<PureState, DensityMatrix>;

struct GateRunResult {
  GateMode mode;
  GateState final_state;
  PureState ideal_state;  // analytic image of psi0
  double fidelity;        // against ideal_state
  double gate_time;
  double dt;              // 0 for effective_analytic
  int n_steps;
  int fock_cutoff;
  double trace_drift;     // norm drift for pure modes
  double b_population_max;
  double min_eigenvalue;  // 1 for pure modes

  double fidelity_against(const PureState& target) const;
  // Fidelity after the best local phase gate diag(e^{i phi_j}) on the ququart.
  double phase_compensated_fidelity(const PureState& target) const;
};

// Evolves psi0 for pi / (3 lambda_1). Open-system modes require `dec`.
GateRunResult run_gate(GateMode mode, const model::DeviceParams& device,
                       const std::optional<model::DecoherenceParams>& dec, const PureState& psi0,
                       const GateRunOptions& options = {});

// max over ququart phases of sqrt(<psi| U rho U^+ |psi>), U = diag(e^{i phi_j}) (x) 1.
double phase_compensated_fidelity(const PureState& target, const DensityMatrix& rho);
double phase_compensated_fidelity(const PureState& target, const PureState& state);

}  // namespace catcsum::protocol
