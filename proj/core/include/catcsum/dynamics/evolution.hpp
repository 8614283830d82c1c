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

#include <vector>

#include "catcsum/core/operators.hpp"
#include "catcsum/core/states.hpp"
#include "catcsum/dynamics/time_dependent_operator.hpp"
#include "catcsum/model/device.hpp"

namespace catcsum::dynamics {

enum class Method { rk4 };

inline constexpr int kMinPointsPerPeriod = 20;

struct EvolutionConfig {
  double dt = 0.0;  // requested step (us); the integrator uses t_final / n_steps
  double t_final = 0.0;
  Method method = Method::rk4;
  int points_per_period = kMinPointsPerPeriod;
  int sample_every = 0;  // record a Sample every k steps (0: endpoints only)

  // Largest step resolving the fastest phase of `h` with `points_per_period`
  // samples, multiplied by dt_scale (<= 1). Throws for static operators,
  // which have no natural step.
  static EvolutionConfig for_operator(const TimeDependentOperator& h, double t_final,
                                      int points_per_period = kMinPointsPerPeriod,
                                      double dt_scale = 1.0);

  int n_steps() const;
  double step() const { return t_final / n_steps(); }
  // Enforces dt <= 2 pi / (max_frequency * points_per_period).
  void validate(const TimeDependentOperator& h) const;
};

struct Sample {
  double t;
  double b_population;
  double norm;  // ||psi||^2 or tr(rho)
};

inline constexpr double kDriftFailure = 1e-4;
inline constexpr double kDriftTarget = 1e-6;

struct SchrodingerResult {
  PureState state;
  double norm_drift;  // | ||psi|| - 1 |
  double b_population_max;
  int n_steps;
  double dt;
  std::vector<Sample> samples;
};

// RK4 for d psi/dt = -i H(t) psi without renormalization. Throws
// integration_failure when the norm drift exceeds kDriftFailure.
SchrodingerResult evolve_schrodinger(const TimeDependentOperator& h, const PureState& psi0,
                                     const EvolutionConfig& cfg);

struct LindbladResult {
  DensityMatrix state;
  double trace_drift;
  double b_population_max;
  double min_eigenvalue;
  int n_steps;
  double dt;
  std::vector<Sample> samples;
};

// RK4 for d rho/dt = -i[H(t), rho] + sum_k D[L_k] rho, with
// D[L] rho = L rho L^+ - {L^+ L, rho}/2. rho is symmetrized after each step.
// Throws integration_failure when the trace drift exceeds kDriftFailure or
// the final smallest eigenvalue is below -1e-6.
LindbladResult evolve_lindblad(const TimeDependentOperator& h,
                               const std::vector<Operator>& collapse,
                               const DensityMatrix& rho0, const EvolutionConfig& cfg);

// Closed-form evolution under the diagonal dispersive Hamiltonian without |b>:
// the amplitude on |j, n> picks up e^{i lambda_j n t} (lambda_0 = 0). Throws
// invalid_state if psi0 has |b> amplitude above 1e-10.
PureState evolve_effective_analytic(const model::DispersiveShifts& shifts, const PureState& psi0,
                                    double t);

}  // namespace catcsum::dynamics
