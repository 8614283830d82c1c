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

#include "catcsum/model/device.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "catcsum/error.hpp"

namespace catcsum::model {

std::string_view to_string(Transition t) {
  switch (t) {
    case Transition::t1b:
      return "1b";
    case Transition::t2b:
      return "2b";
    case Transition::t0b:
      return "0b";
    case Transition::t01:
      return "01";
    case Transition::t02:
      return "02";
    case Transition::t12:
      return "12";
  }
  return "?";
}

CouplingStructure coupling_structure(Transition t) {
  switch (t) {
    case Transition::t1b:
      return {Level::b, Level::one};
    case Transition::t2b:
      return {Level::b, Level::two};
    case Transition::t0b:
      return {Level::b, Level::zero};
    case Transition::t01:
      return {Level::zero, Level::one};
    case Transition::t02:
      return {Level::two, Level::zero};
    case Transition::t12:
      return {Level::two, Level::one};
  }
  throw Error(ErrorCode::invalid_argument, "unknown transition");
}

void DeviceParams::set(Transition t, double frequency, double coupling_constant) {
  omega[static_cast<int>(t)] = frequency;
  g[static_cast<int>(t)] = coupling_constant;
}

DeviceParams DeviceParams::reference() {
  DeviceParams p;
  p.omega_c = ghz_to_rad_per_us(10.5);
  const double strong = mhz_to_rad_per_us(120.0);
  const double weak = mhz_to_rad_per_us(12.0);
  p.set(Transition::t1b, ghz_to_rad_per_us(14.5), strong);
  p.set(Transition::t2b, ghz_to_rad_per_us(12.5), strong);
  p.set(Transition::t0b, ghz_to_rad_per_us(13.5), weak);
  p.set(Transition::t01, ghz_to_rad_per_us(1.0), weak);
  // |0> sits 1 GHz above |1>, |2> sits 2 GHz above |1>.
  p.set(Transition::t02, ghz_to_rad_per_us(1.0), weak);
  p.set(Transition::t12, ghz_to_rad_per_us(2.0), strong);
  p.alpha = 3.05;
  return p;
}

double DispersiveShifts::relative_mismatch() const {
  return std::abs(lambda2 - 2.0 * lambda1) / std::abs(lambda1);
}

DispersiveShifts dispersive_shifts(const DeviceParams& params) {
  const double g1 = params.coupling(Transition::t1b);
  const double g2 = params.coupling(Transition::t2b);
  return {g1 * g1 / params.detuning(Transition::t1b), g2 * g2 / params.detuning(Transition::t2b)};
}

std::vector<DispersiveCheck> dispersive_validity(const DeviceParams& params, double min_ratio) {
  std::vector<DispersiveCheck> out;
  for (Transition t : {Transition::t1b, Transition::t2b}) {
    const double g = params.coupling(t);
    const double ratio = g == 0.0 ? std::numeric_limits<double>::infinity()
                                  : std::abs(params.detuning(t)) / std::abs(g);
    out.push_back({t, ratio, ratio >= min_ratio});
  }
  return out;
}

double gate_time(const DispersiveShifts& shifts) {
  if (shifts.lambda1 == 0.0 || !std::isfinite(shifts.lambda1)) {
    throw Error(ErrorCode::invalid_argument, "gate condition undefined: lambda1 = 0");
  }
  return std::numbers::pi / (3.0 * std::abs(shifts.lambda1));
}

GateCondition validate_gate_condition(const DeviceParams& params) {
  const DispersiveShifts s = dispersive_shifts(params);
  const double t = gate_time(s);
  return {s.lambda1, s.lambda2, s.relative_mismatch(), t};
}

DecoherenceParams DecoherenceParams::from_timescale(double timescale_us, double kappa_inv_us) {
  if (!(timescale_us > 0.0) || !(kappa_inv_us > 0.0)) {
    throw Error(ErrorCode::invalid_argument, "T and kappa^-1 must be positive");
  }
  const double t = timescale_us;
  DecoherenceParams d;
  d.kappa = 1.0 / kappa_inv_us;
  d.gamma_0b = d.gamma_02 = d.gamma_01 = 1.0 / (5.0 * t);
  d.gamma_1b = d.gamma_2b = 1.0 / (t / 2.0);
  d.gamma_12 = 1.0 / t;
  d.gamma_phi_b = d.gamma_phi_2 = 1.0 / (t / 2.0);
  d.gamma_phi_0 = 1.0 / (2.5 * t);
  d.timescale = t;
  return d;
}

void DecoherenceParams::validate() const {
  const std::pair<const char*, double> rates[] = {
      {"kappa", kappa},         {"gamma_0b", gamma_0b},       {"gamma_1b", gamma_1b},
      {"gamma_2b", gamma_2b},   {"gamma_02", gamma_02},       {"gamma_12", gamma_12},
      {"gamma_01", gamma_01},   {"gamma_phi_0", gamma_phi_0}, {"gamma_phi_2", gamma_phi_2},
      {"gamma_phi_b", gamma_phi_b}};
  for (const auto& [name, rate] : rates) {
    if (!std::isfinite(rate) || rate < 0.0) {
      std::ostringstream os;
      os << "decoherence rate " << name << " must be finite and >= 0, got " << rate;
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }
}

}  // namespace catcsum::model
