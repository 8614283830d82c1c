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

#include "catcsum/experiments/validate.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "catcsum/core/cat.hpp"
#include "catcsum/core/fidelity.hpp"
#include "catcsum/dynamics/evolution.hpp"
#include "catcsum/protocol/gate.hpp"
#include "catcsum/protocol/preparation.hpp"

namespace catcsum::experiments {

namespace {

ValidationCheck at_most(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value <= threshold, value, threshold, std::move(detail)};
}

ValidationCheck at_least(std::string name, double value, double threshold, std::string detail = {}) {
  return {std::move(name), value >= threshold, value, threshold, std::move(detail)};
}

}  // namespace

std::vector<ValidationCheck> validate_config(const ExperimentConfig& config) {
  config.validate();
  const model::DeviceParams device = config.device.to_device();
  const SystemDims dims(config.fock_cutoff);
  std::vector<ValidationCheck> out;

  out.push_back(at_most("cat_quasi_orthogonality",
                        CatCode(device.alpha, dims.fock_cutoff()).max_offdiagonal_overlap_sq(), 1e-4,
                        "max |<k|l>|^2, k != l"));

  for (const auto& check : model::dispersive_validity(device)) {
    out.push_back(at_least("dispersive_ratio_" + std::string(model::to_string(check.transition)),
                           check.ratio, 10.0, "|Delta| / g"));
  }

  std::set<std::pair<int, int>> images;
  int order_three = 0;
  for (const auto& label : protocol::all_labels()) {
    const auto image = protocol::csum_target(label);
    images.insert({image.control, image.target});
    if (protocol::csum_target(protocol::csum_target(image)) == label) ++order_three;
  }
  out.push_back(at_least("csum_bijection", static_cast<double>(images.size()), 9.0));
  out.push_back(at_least("csum_order_three", static_cast<double>(order_three), 9.0));

  const auto shifts = model::dispersive_shifts(device);
  const double t_gate = model::gate_time(shifts);
  std::vector<PureState> inputs;
  std::vector<PureState> outputs;
  double worst_truth = 1.0;
  double worst_population = 0.0;
  for (const auto& label : protocol::all_labels()) {
    inputs.push_back(protocol::hybrid_basis_state(label, device.alpha, dims));
    outputs.push_back(dynamics::evolve_effective_analytic(shifts, inputs.back(), t_gate));
    const auto expected =
        protocol::hybrid_basis_state(protocol::csum_target(label), device.alpha, dims);
    worst_truth = std::min(worst_truth, fidelity(expected, outputs.back()));
    const auto before = inputs.back().level_populations();
    const auto after = outputs.back().level_populations();
    for (int j = 0; j < kQuquartDim; ++j) {
      worst_population = std::max(worst_population, std::abs(before[j] - after[j]));
    }
  }
  out.push_back(at_least("truth_table", worst_truth, 1.0 - 1e-4, "min fidelity over nine inputs"));
  out.push_back(at_most("control_preservation", worst_population, 1e-6));

  double gram = 0.0;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    for (std::size_t j = 0; j < inputs.size(); ++j) {
      gram = std::max(gram, std::abs(outputs[i].inner(outputs[j]) - inputs[i].inner(inputs[j])));
    }
  }
  out.push_back(at_most("gate_unitarity", gram, 1e-8, "max Gram matrix deviation"));

  double worst_norm = 0.0;
  for (double d : config.deltas) {
    worst_norm = std::max(worst_norm,
                          std::abs(protocol::initial_state(d, device.alpha, dims).norm() - 1.0));
  }
  out.push_back(at_most("initial_state_norm", worst_norm, 1e-8));

  const auto prep = protocol::prepare_control_superposition();
  const double s3 = 1.0 / std::sqrt(3.0);
  QuquartVector uniform;
  uniform << s3, s3, s3, 0.0;
  out.push_back(at_most("control_superposition", (prep.state - uniform).cwiseAbs().maxCoeff(), 1e-12));

  const PureState target = protocol::target_entangled_state(device.alpha, dims);
  const PureState evolved = dynamics::evolve_effective_analytic(
      shifts, protocol::initial_state(0.0, device.alpha, dims), t_gate);
  out.push_back(at_least("entangled_target_overlap", fidelity(target, evolved), 1.0 - 1e-4));

  double worst_rate = 0.0;
  std::vector<std::pair<double, double>> grid;
  for (double t : config.timescales_us) {
    for (double k : config.kappa_inv_us) grid.emplace_back(t, k);
  }
  for (double k : config.delta_kappa_inv_us) grid.emplace_back(config.delta_timescale_us, k);
  for (const auto& [t, k] : grid) {
    const auto dec = model::DecoherenceParams::from_timescale(t, k);
    dec.validate();
    worst_rate = std::max({worst_rate, dec.kappa, dec.gamma_1b, dec.gamma_2b, dec.gamma_phi_b});
  }
  out.push_back(at_most("max_rate_times_gate_time", worst_rate * t_gate, 1.0,
                        "largest decoherence rate x gate time"));
  return out;
}

bool all_passed(const std::vector<ValidationCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

}  // namespace catcsum::experiments
