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

#include "catcsum/experiments/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "catcsum/error.hpp"
#include "catcsum/experiments/csv.hpp"

namespace catcsum::experiments {

namespace pt = boost::property_tree;

namespace {

std::string omega_key(model::Transition t) {
  return "omega_" + std::string(model::to_string(t)) + "_GHz";
}

std::string g_key(model::Transition t) {
  return "g_" + std::string(model::to_string(t)) + "_MHz";
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
  const std::string s = trim(raw);
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::config_error, "key '" + key + "': not a number: '" + s + "'");
  }
}

int parse_int(const std::string& key, const std::string& raw) {
  const double v = parse_double(key, raw);
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(ErrorCode::config_error, "key '" + key + "': not an integer");
  }
  return static_cast<int>(v);
}

std::vector<double> parse_list(const std::string& key, const std::string& raw) {
  std::vector<double> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_double(key, item));
  return out;
}

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += format_double(values[i]);
  }
  return out;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorCode::config_error, message);
}

}  // namespace

model::DeviceParams LabDeviceParams::to_device() const {
  model::DeviceParams p;
  p.omega_c = model::ghz_to_rad_per_us(omega_c_ghz);
  for (model::Transition t : model::kAllTransitions) {
    const int i = static_cast<int>(t);
    p.set(t, model::ghz_to_rad_per_us(omega_ghz[i]), model::mhz_to_rad_per_us(g_mhz[i]));
  }
  p.alpha = alpha;
  return p;
}

std::vector<double> linspace(double first, double last, int count) {
  if (count < 1) throw Error(ErrorCode::invalid_argument, "linspace needs count >= 1");
  if (count == 1) return {first};
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = first + (last - first) * static_cast<double>(i) / (count - 1);
  }
  out.back() = last;
  return out;
}

ExperimentConfig default_config() {
  ExperimentConfig c;
  c.kappa_inv_us = linspace(10.0, 150.0, 8);
  c.deltas = linspace(-0.1, 0.1, 9);
  return c;
}

void ExperimentConfig::validate() const {
  require(!timescales_us.empty(), "decoherence.T_us must not be empty");
  require(!kappa_inv_us.empty(), "decoherence.kappa_inv_us must not be empty");
  require(!deltas.empty(), "sweep.delta must not be empty");
  require(!delta_kappa_inv_us.empty(), "sweep.kappa_inv_us must not be empty");
  for (double v : timescales_us) require(v > 0.0, "T must be > 0");
  for (double v : kappa_inv_us) require(v > 0.0, "kappa^-1 must be > 0");
  for (double v : delta_kappa_inv_us) require(v > 0.0, "kappa^-1 must be > 0");
  require(delta_timescale_us > 0.0, "sweep.T_us must be > 0");
  for (double d : deltas) require(std::abs(d) < 1.0 / std::sqrt(3.0), "|delta| must be < 1/sqrt(3)");
  require(fock_cutoff >= kMinCutoff && fock_cutoff <= kMaxCutoff,
          "fock_cutoff must be in [" + std::to_string(kMinCutoff) + ", " +
              std::to_string(kMaxCutoff) + "]");
  require(dt_scale > 0.0 && dt_scale <= 1.0, "dt_scale must be in (0, 1]");
  require(points_per_period >= 20, "points_per_period must be >= 20");
  require(jobs >= 1, "jobs must be >= 1");
  require(device.alpha > 0.0, "alpha must be > 0");
  require(device.omega_c_ghz > 0.0, "omega_c_GHz must be > 0");
}

ExperimentConfig parse_config(const std::string& text) {
  pt::ptree tree;
  try {
    std::istringstream in(text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw Error(ErrorCode::config_error, e.message() + " at line " + std::to_string(e.line()));
  }

  ExperimentConfig c = default_config();
  const std::set<std::string> sections{"device", "decoherence", "sweep", "simulation", "output"};
  for (const auto& [name, section] : tree) {
    require(sections.count(name) == 1, "unknown section [" + name + "]");
    for (const auto& [key, node] : section) {
      const std::string value = node.get_value<std::string>();
      const std::string where = name + "." + key;
      bool known = true;
      if (name == "device") {
        known = false;
        if (key == "omega_c_GHz") {
          c.device.omega_c_ghz = parse_double(where, value);
          known = true;
        } else if (key == "alpha") {
          c.device.alpha = parse_double(where, value);
          known = true;
        }
        for (model::Transition t : model::kAllTransitions) {
          const int i = static_cast<int>(t);
          if (key == omega_key(t)) {
            c.device.omega_ghz[i] = parse_double(where, value);
            known = true;
          } else if (key == g_key(t)) {
            c.device.g_mhz[i] = parse_double(where, value);
            known = true;
          }
        }
      } else if (name == "decoherence") {
        if (key == "T_us") c.timescales_us = parse_list(where, value);
        else if (key == "kappa_inv_us") c.kappa_inv_us = parse_list(where, value);
        else known = false;
      } else if (name == "sweep") {
        if (key == "delta") c.deltas = parse_list(where, value);
        else if (key == "kappa_inv_us") c.delta_kappa_inv_us = parse_list(where, value);
        else if (key == "T_us") c.delta_timescale_us = parse_double(where, value);
        else known = false;
      } else if (name == "simulation") {
        if (key == "fock_cutoff") c.fock_cutoff = parse_int(where, value);
        else if (key == "dt_scale") c.dt_scale = parse_double(where, value);
        else if (key == "points_per_period") c.points_per_period = parse_int(where, value);
        else if (key == "jobs") c.jobs = parse_int(where, value);
        else if (key == "mode") {
          try {
            c.mode = protocol::gate_mode_from_string(trim(value));
          } catch (const Error& e) {
            throw Error(ErrorCode::config_error, where + ": " + e.what());
          }
        } else known = false;
      } else if (name == "output") {
        if (key == "path") c.output = trim(value);
        else known = false;
      }
      require(known, "unknown key '" + where + "'");
    }
  }
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open config: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "[device]\n";
  out << "omega_c_GHz = " << format_double(c.device.omega_c_ghz) << "\n";
  for (model::Transition t : model::kAllTransitions) {
    out << omega_key(t) << " = " << format_double(c.device.omega_ghz[static_cast<int>(t)]) << "\n";
  }
  for (model::Transition t : model::kAllTransitions) {
    out << g_key(t) << " = " << format_double(c.device.g_mhz[static_cast<int>(t)]) << "\n";
  }
  out << "alpha = " << format_double(c.device.alpha) << "\n\n";
  out << "[decoherence]\n";
  out << "T_us = " << join(c.timescales_us) << "\n";
  out << "kappa_inv_us = " << join(c.kappa_inv_us) << "\n\n";
  out << "[sweep]\n";
  out << "delta = " << join(c.deltas) << "\n";
  out << "kappa_inv_us = " << join(c.delta_kappa_inv_us) << "\n";
  out << "T_us = " << format_double(c.delta_timescale_us) << "\n\n";
  out << "[simulation]\n";
  out << "fock_cutoff = " << c.fock_cutoff << "\n";
  out << "dt_scale = " << format_double(c.dt_scale) << "\n";
  out << "points_per_period = " << c.points_per_period << "\n";
  out << "mode = " << protocol::to_string(c.mode) << "\n";
  out << "jobs = " << c.jobs << "\n\n";
  out << "[output]\n";
  out << "path = " << c.output << "\n";
  return out.str();
}

}  // namespace catcsum::experiments
