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

#include "catcsum/protocol/preparation.hpp"

#include <cmath>
#include <numbers>

#include "catcsum/core/cat.hpp"
#include "catcsum/error.hpp"
#include "catcsum/protocol/gate.hpp"

namespace catcsum::protocol {

QuquartMatrix pulse_rotation(const PulseSpec& pulse) {
  if (pulse.duration < 0.0) {
    throw Error(ErrorCode::invalid_argument, "pulse duration must be >= 0");
  }
  if (pulse.from == pulse.to) {
    throw Error(ErrorCode::invalid_argument, "pulse needs two distinct levels");
  }
  const int f = level_index(pulse.from);
  const int t = level_index(pulse.to);
  const double theta = pulse.rabi_frequency * pulse.duration;
  const Complex phase = std::polar(1.0, pulse.phase);
  const Complex i(0.0, 1.0);
  QuquartMatrix u = QuquartMatrix::Identity();
  u(f, f) = std::cos(theta);
  u(t, t) = std::cos(theta);
  u(t, f) = -i * std::conj(phase) * std::sin(theta);
  u(f, t) = -i * phase * std::sin(theta);
  return u;
}

ControlPreparation prepare_control_superposition(double rabi_1, double rabi_2) {
  if (!(rabi_1 > 0.0) || !(rabi_2 > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "Rabi frequencies must be positive");
  }
  ControlPreparation prep;
  prep.pulses[0] = {Level::zero, Level::one, rabi_1, -std::numbers::pi / 2.0,
                    std::acos(1.0 / std::sqrt(3.0)) / rabi_1};
  prep.pulses[1] = {Level::one, Level::two, rabi_2, -std::numbers::pi / 2.0,
                    (std::numbers::pi / 4.0) / rabi_2};
  QuquartVector psi = QuquartVector::Zero();
  psi(0) = 1.0;
  prep.after_first_pulse = pulse_rotation(prep.pulses[0]) * psi;
  prep.state = pulse_rotation(prep.pulses[1]) * prep.after_first_pulse;
  return prep;
}

PureState initial_state(double delta, Complex alpha, SystemDims dims) {
  if (!(std::abs(delta) < 1.0)) {
    throw Error(ErrorCode::invalid_argument, "initial_state requires |delta| < 1");
  }
  const double s3 = 1.0 / std::sqrt(3.0);
  QuquartVector q;
  q << s3 + delta, s3, s3 - delta, 0.0;
  q /= std::sqrt(1.0 + 2.0 * delta * delta);

  const int n_fock = dims.fock_cutoff();
  const Eigen::VectorXcd plus = coherent_state(alpha, n_fock).amplitudes();
  const Eigen::VectorXcd minus = coherent_state(-alpha, n_fock).amplitudes();
  Eigen::VectorXcd c = std::sqrt(1.0 + delta) * plus + std::sqrt(1.0 - delta) * minus;
  if (delta == 0.0) {
    // Exact parity, identical to cat_codeword(0).
    c = cat_codeword(0, alpha, n_fock).amplitudes();
  }
  const CavityState cavity = CavityState::normalized(std::move(c));
  return PureState::normalized(dims, PureState::product(q, cavity).amplitudes());
}

PureState target_entangled_state(Complex alpha, SystemDims dims) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dims.total_dim());
  for (int j = 0; j < 3; ++j) {
    v += hybrid_basis_state(HybridBasisLabel(j, j), alpha, dims).amplitudes();
  }
  return PureState::normalized(dims, std::move(v));
}

}  // namespace catcsum::protocol
