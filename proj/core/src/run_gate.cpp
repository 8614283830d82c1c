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

#include "catcsum/protocol/run_gate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catcsum/core/fidelity.hpp"
#include "catcsum/dynamics/evolution.hpp"
#include "catcsum/error.hpp"
#include "catcsum/model/collapse.hpp"

namespace catcsum::protocol {

namespace {

struct ModeName {
  GateMode mode;
  std::string_view name;
};

constexpr ModeName kModeNames[] = {
    {GateMode::effective_analytic, "effective_analytic"},
    {GateMode::rwa, "rwa"},
    {GateMode::full, "full"},
    {GateMode::rwa_lindblad, "rwa_lindblad"},
    {GateMode::full_lindblad, "full_lindblad"},
};

// M_jk = <t_j| rho_jk |t_k>, with t_j the cavity block of the target on level j.
Eigen::Matrix4cd block_overlaps(const PureState& target, const Eigen::MatrixXcd& rho) {
  const int n = target.dims().fock_cutoff();
  Eigen::Matrix4cd m;
  for (int j = 0; j < kQuquartDim; ++j) {
    const auto tj = target.amplitudes().segment(j * n, n);
    for (int k = 0; k < kQuquartDim; ++k) {
      const auto tk = target.amplitudes().segment(k * n, n);
      m(j, k) = tj.dot(rho.block(j * n, k * n, n, n) * tk);
    }
  }
  return m;
}

double maximize_phases(const Eigen::Matrix4cd& m) {
  std::array<double, kQuquartDim> phi{};
  auto value = [&] {
    Complex s = 0.0;
    for (int j = 0; j < kQuquartDim; ++j) {
      for (int k = 0; k < kQuquartDim; ++k) {
        s += std::polar(1.0, phi[j] - phi[k]) * m(j, k);
      }
    }
    return s.real();
  };
  double best = value();
  for (int sweep = 0; sweep < 200; ++sweep) {
    for (int j = 0; j < kQuquartDim; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < kQuquartDim; ++k) {
        if (k != j) s += m(j, k) * std::polar(1.0, -phi[k]);
      }
      if (std::abs(s) > 0.0) phi[j] = -std::arg(s);
    }
    const double next = value();
    const bool converged = next - best < 1e-15;
    best = std::max(best, next);
    if (converged) break;
  }
  return std::sqrt(std::clamp(best, 0.0, 1.0));
}

}  // namespace

std::string_view to_string(GateMode mode) {
  for (const auto& entry : kModeNames) {
    if (entry.mode == mode) return entry.name;
  }
  return "unknown";
}

GateMode gate_mode_from_string(std::string_view name) {
  for (const auto& entry : kModeNames) {
    if (entry.name == name) return entry.mode;
  }
  throw Error(ErrorCode::invalid_argument, "unknown gate mode: " + std::string(name));
}

bool is_open_system(GateMode mode) {
  return mode == GateMode::rwa_lindblad || mode == GateMode::full_lindblad;
}

double phase_compensated_fidelity(const PureState& target, const DensityMatrix& rho) {
  require_same_dims(target.dims(), rho.dims());
  return maximize_phases(block_overlaps(target, rho.data()));
}

double phase_compensated_fidelity(const PureState& target, const PureState& state) {
  require_same_dims(target.dims(), state.dims());
  const int n = target.dims().fock_cutoff();
  double sum = 0.0;
  for (int j = 0; j < kQuquartDim; ++j) {
    sum += std::abs(
        target.amplitudes().segment(j * n, n).dot(state.amplitudes().segment(j * n, n)));
  }
  return std::clamp(sum, 0.0, 1.0);
}

double GateRunResult::fidelity_against(const PureState& target) const {
  return std::visit([&](const auto& s) { return catcsum::fidelity(target, s); }, final_state);
}

double GateRunResult::phase_compensated_fidelity(const PureState& target) const {
  return std::visit(
      [&](const auto& s) { return protocol::phase_compensated_fidelity(target, s); },
      final_state);
}

GateRunResult run_gate(GateMode mode, const model::DeviceParams& device,
                       const std::optional<model::DecoherenceParams>& dec, const PureState& psi0,
                       const GateRunOptions& options) {
  const SystemDims dims = psi0.dims();
  const model::DispersiveShifts shifts = model::dispersive_shifts(device);
  const double t_gate = model::gate_time(shifts);
  PureState ideal = dynamics::evolve_effective_analytic(shifts, psi0, t_gate);

  if (mode == GateMode::effective_analytic) {
    return GateRunResult{mode, ideal, ideal, 1.0, t_gate, 0.0, 0, dims.fock_cutoff(),
                         0.0, 0.0, 1.0};
  }

  const dynamics::TimeDependentOperator h =
      (mode == GateMode::rwa || mode == GateMode::rwa_lindblad)
          ? model::hamiltonian_rwa(device, dims)
          : model::hamiltonian_full(device, dims, options.selection);
  dynamics::EvolutionConfig cfg = dynamics::EvolutionConfig::for_operator(
      h, t_gate, options.points_per_period, options.dt_scale);
  cfg.sample_every = options.sample_every;

  if (!is_open_system(mode)) {
    dynamics::SchrodingerResult r = dynamics::evolve_schrodinger(h, psi0, cfg);
    const double f = fidelity(ideal, r.state);
    return GateRunResult{mode, std::move(r.state), std::move(ideal), f, t_gate, r.dt,
                         r.n_steps, dims.fock_cutoff(), r.norm_drift, r.b_population_max, 1.0};
  }

  if (!dec) {
    throw Error(ErrorCode::invalid_argument,
                std::string(to_string(mode)) + " requires decoherence parameters");
  }
  dec->validate();
  const auto channels = model::collapse_operators(*dec, dims);
  dynamics::LindbladResult r = dynamics::evolve_lindblad(
      h, model::collapse_matrices(channels), DensityMatrix::from_pure(psi0), cfg);
  const double f = fidelity(ideal, r.state);
  return GateRunResult{mode, std::move(r.state), std::move(ideal), f, t_gate, r.dt, r.n_steps,
                       dims.fock_cutoff(), r.trace_drift, r.b_population_max, r.min_eigenvalue};
}

}  // namespace catcsum::protocol
