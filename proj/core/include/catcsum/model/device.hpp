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
#include <numbers>
#include <string_view>
#include <vector>

#include "catcsum/core/dims.hpp"

namespace catcsum::model {

// Units: angular frequencies in rad/us, times in us, rates in 1/us.
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double ghz_to_rad_per_us(double ghz) { return kTwoPi * 1e3 * ghz; }
constexpr double mhz_to_rad_per_us(double mhz) { return kTwoPi * mhz; }
constexpr double rad_per_us_to_ghz(double w) { return w / (kTwoPi * 1e3); }
constexpr double rad_per_us_to_mhz(double w) { return w / kTwoPi; }

// Ququart transitions coupled to the cavity.
enum class Transition : int { t1b = 0, t2b, t0b, t01, t02, t12 };
inline constexpr int kTransitionCount = 6;
inline constexpr std::array<Transition, kTransitionCount> kAllTransitions = {
    Transition::t1b, Transition::t2b, Transition::t0b,
    Transition::t01, Transition::t02, Transition::t12};

std::string_view to_string(Transition t);  // "1b", "2b", ...

// Each coupling term is g * (e^{i Delta t} a |raised><lowered| + h.c.), with
// the ket/bra order of the interaction-picture Hamiltonian.
struct CouplingStructure {
  Level raised;
  Level lowered;
};
CouplingStructure coupling_structure(Transition t);

struct DeviceParams {
  double omega_c = 0.0;
  std::array<double, kTransitionCount> omega{};  // transition frequencies
  std::array<double, kTransitionCount> g{};      // coupling constants
  double alpha = 0.0;                            // cat amplitude

  double transition_frequency(Transition t) const { return omega[static_cast<int>(t)]; }
  double coupling(Transition t) const { return g[static_cast<int>(t)]; }
  void set(Transition t, double frequency, double coupling_constant);
  // Delta_xy = omega_xy - omega_c
  double detuning(Transition t) const { return transition_frequency(t) - omega_c; }

  // Flux-ququart parameter set used for the entangling-gate numerics.
  static DeviceParams reference();
};

struct DispersiveShifts {
  double lambda1 = 0.0;  // g_1b^2 / Delta_1b
  double lambda2 = 0.0;  // g_2b^2 / Delta_2b

  // |lambda2 - 2 lambda1| / lambda1
  double relative_mismatch() const;
};

DispersiveShifts dispersive_shifts(const DeviceParams& params);

struct DispersiveCheck {
  Transition transition;
  double ratio;  // |Delta| / g
  bool valid;    // ratio >= 10
};

// Large-detuning check for the two gate transitions (1b, 2b). Below the
// threshold the caller should warn; nothing is rejected.
std::vector<DispersiveCheck> dispersive_validity(const DeviceParams& params,
                                                 double min_ratio = 10.0);

struct GateCondition {
  double lambda1;
  double lambda2;
  double relative_mismatch;
  double gate_time;  // pi / (3 lambda1)
};

// Throws invalid_argument when lambda1 == 0.
GateCondition validate_gate_condition(const DeviceParams& params);
double gate_time(const DispersiveShifts& shifts);

struct DecoherenceParams {
  double kappa = 0.0;
  double gamma_0b = 0.0;
  double gamma_1b = 0.0;
  double gamma_2b = 0.0;
  double gamma_02 = 0.0;
  double gamma_12 = 0.0;
  double gamma_01 = 0.0;  // decay |0> -> |1> (|1> is the physical ground level)
  double gamma_phi_0 = 0.0;
  double gamma_phi_2 = 0.0;
  double gamma_phi_b = 0.0;
  double timescale = 0.0;  // T in us, informational

  // gamma_0b^-1 = gamma_02^-1 = gamma_01^-1 = 5T, gamma_1b^-1 = gamma_2b^-1 = T/2,
  // gamma_12^-1 = T, gamma_phi_b^-1 = gamma_phi_2^-1 = T/2, gamma_phi_0^-1 = 2.5T,
  // kappa = 1 / kappa_inv. Both arguments in us; either may be +inf to switch
  // the corresponding channels off.
  static DecoherenceParams from_timescale(double timescale_us, double kappa_inv_us);

  // Throws invalid_argument if any rate is negative or non-finite.
  void validate() const;
};

}  // namespace catcsum::model
