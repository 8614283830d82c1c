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

#include <functional>
#include <string>
#include <vector>

#include "catcsum/experiments/config.hpp"
#include "catcsum/experiments/csv.hpp"

namespace catcsum::experiments {

struct SweepPoint {
  double kappa_inv_us;
  double timescale_us;
  double delta;
};

struct SweepRecord {
  SweepPoint point;
  protocol::GateMode mode;
  int fock_cutoff;
  double dt_us;
  int n_steps;
  double fidelity;            // against the analytic image of the input
  double fidelity_entangled;  // against (|00> + |11> + |22>)/sqrt(3)
  double fidelity_zcorr;      // fidelity after the best ququart phase correction
  double trace_drift;
  double b_population_max;
  double min_eigenvalue;
  double runtime_s;           // wall clock; not written to CSV
};

// (kappa^-1, T) grid at delta = 0, kappa^-1 fastest.
std::vector<SweepPoint> kappa_sweep_points(const ExperimentConfig& config);
// (delta, kappa^-1) grid at the delta-sweep T, delta fastest.
std::vector<SweepPoint> delta_sweep_points(const ExperimentConfig& config);

SweepRecord run_point(const ExperimentConfig& config, const SweepPoint& point);

using ProgressFn = std::function<void(std::size_t index, const SweepRecord& record)>;

// Runs the points on config.jobs worker threads. Records come back in input
// order. The first failure is rethrown after all workers stop.
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config,
                                   const std::vector<SweepPoint>& points,
                                   const ProgressFn& progress = {});

std::vector<std::string> sweep_csv_header();
CsvTable sweep_table(const std::vector<SweepRecord>& records);

}  // namespace catcsum::experiments
