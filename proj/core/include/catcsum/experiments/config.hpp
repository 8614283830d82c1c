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
#include <filesystem>
#include <string>
#include <vector>

#include "catcsum/model/device.hpp"
#include "catcsum/protocol/run_gate.hpp"

namespace catcsum::experiments {

// Device parameters as written in a config file: transition and cavity
// frequencies in GHz (omega / 2 pi), couplings in MHz (g / 2 pi).
struct LabDeviceParams {
  double omega_c_ghz = 10.5;
  std::array<double, model::kTransitionCount> omega_ghz{14.5, 12.5, 13.5, 1.0, 1.0, 2.0};
  std::array<double, model::kTransitionCount> g_mhz{120.0, 120.0, 12.0, 12.0, 12.0, 120.0};
  double alpha = 3.05;

  model::DeviceParams to_device() const;
};

struct ExperimentConfig {
  LabDeviceParams device;

  // kappa sweep grid
  std::vector<double> timescales_us{10.0, 20.0, 30.0};
  std::vector<double> kappa_inv_us;  // default linspace(10, 150, 8)

  // delta sweep grid
  std::vector<double> deltas;  // default linspace(-0.1, 0.1, 9)
  std::vector<double> delta_kappa_inv_us{50.0, 100.0, 150.0};
  double delta_timescale_us = 20.0;

  int fock_cutoff = 40;
  double dt_scale = 1.0;
  int points_per_period = 20;
  protocol::GateMode mode = protocol::GateMode::full_lindblad;
  int jobs = 1;

  std::string output = "results.csv";

  // Throws config_error on empty lists, non-positive kappa^-1 or T,
  // |delta| >= 1/sqrt(3), cutoff outside [kMinCutoff, kMaxCutoff],
  // dt_scale outside (0, 1], points_per_period < 20 or jobs < 1.
  void validate() const;
};

inline constexpr int kMinCutoff = 10;
inline constexpr int kMaxCutoff = 120;

std::vector<double> linspace(double first, double last, int count);

ExperimentConfig default_config();

// INI text with sections [device], [decoherence], [sweep], [simulation],
// [output]. Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);
std::string serialize_config(const ExperimentConfig& config);

}  // namespace catcsum::experiments
