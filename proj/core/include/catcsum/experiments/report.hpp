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
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "catcsum/experiments/config.hpp"
#include "catcsum/experiments/csv.hpp"

namespace catcsum::experiments {

struct ScalarReport {
  double lambda1;            // rad/us
  double lambda2;            // rad/us
  double relative_mismatch;  // |lambda2 - 2 lambda1| / lambda1
  double gate_time_us;       // pi / (3 lambda1)
  std::vector<std::pair<double, double>> quality_factors;  // (kappa^-1 us, omega_c kappa^-1)
  std::vector<std::pair<model::Transition, double>> coupling_ratios;  // g / |Delta|
  Eigen::Matrix3d cat_overlap_sq;  // |<k|l>|^2
  double max_cat_overlap_sq;
};

// Q is listed for every kappa^-1 of both sweeps, sorted and deduplicated.
ScalarReport report_scalars(const ExperimentConfig& config);

// Rows of (quantity, value, unit).
CsvTable report_table(const ScalarReport& report);

}  // namespace catcsum::experiments
