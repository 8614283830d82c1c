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

#include "catcsum/experiments/report.hpp"

#include <algorithm>
#include <cmath>

#include "catcsum/core/cat.hpp"

namespace catcsum::experiments {

ScalarReport report_scalars(const ExperimentConfig& config) {
  const model::DeviceParams device = config.device.to_device();
  const model::GateCondition gate = model::validate_gate_condition(device);

  ScalarReport r;
  r.lambda1 = gate.lambda1;
  r.lambda2 = gate.lambda2;
  r.relative_mismatch = gate.relative_mismatch;
  r.gate_time_us = gate.gate_time;

  std::vector<double> kappas = config.kappa_inv_us;
  kappas.insert(kappas.end(), config.delta_kappa_inv_us.begin(), config.delta_kappa_inv_us.end());
  std::sort(kappas.begin(), kappas.end());
  kappas.erase(std::unique(kappas.begin(), kappas.end()), kappas.end());
  for (double k : kappas) r.quality_factors.emplace_back(k, device.omega_c * k);

  for (model::Transition t : model::kAllTransitions) {
    r.coupling_ratios.emplace_back(t, device.coupling(t) / std::abs(device.detuning(t)));
  }

  const CatCode code(device.alpha, config.fock_cutoff);
  r.cat_overlap_sq = code.overlap_matrix().cwiseAbs2();
  r.max_cat_overlap_sq = code.max_offdiagonal_overlap_sq();
  return r;
}

CsvTable report_table(const ScalarReport& r) {
  CsvTable t;
  t.header = {"quantity", "value", "unit"};
  auto add = [&](std::string name, double value, std::string unit) {
    t.rows.push_back({std::move(name), format_double(value), std::move(unit)});
  };
  add("lambda1_over_2pi", model::rad_per_us_to_mhz(r.lambda1), "MHz");
  add("lambda2_over_2pi", model::rad_per_us_to_mhz(r.lambda2), "MHz");
  add("lambda_mismatch", r.relative_mismatch, "1");
  add("gate_time", r.gate_time_us, "us");
  for (const auto& [k, q] : r.quality_factors) add("Q_kappa_inv_" + format_double(k) + "us", q, "1");
  for (const auto& [tr, ratio] : r.coupling_ratios) {
    add("g_over_delta_" + std::string(model::to_string(tr)), ratio, "1");
  }
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      add("cat_overlap_sq_" + std::to_string(k) + std::to_string(l), r.cat_overlap_sq(k, l), "1");
    }
  }
  add("cat_overlap_sq_max_offdiag", r.max_cat_overlap_sq, "1");
  return t;
}

}  // namespace catcsum::experiments
