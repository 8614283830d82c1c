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

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "catcsum/error.hpp"
#include "catcsum/experiments/config.hpp"
#include "catcsum/experiments/csv.hpp"
#include "catcsum/experiments/report.hpp"
#include "catcsum/experiments/sweep.hpp"
#include "catcsum/experiments/validate.hpp"

namespace ex = catcsum::experiments;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;

struct CommonFlags {
  std::string config;
  std::string out;
  std::string mode;
  std::optional<int> cutoff;
  std::optional<double> dt_scale;
  bool fast = false;
  std::optional<int> jobs;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config, "INI config file (defaults when omitted)")
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", f.out, "output path (overrides [output] path)");
  cmd->add_option("--mode", f.mode,
                  "effective_analytic | rwa | full | rwa_lindblad | full_lindblad");
  cmd->add_option("--cutoff", f.cutoff, "Fock cutoff N");
  cmd->add_option("--dt-scale", f.dt_scale, "step multiplier in (0, 1]");
  cmd->add_flag("--fast", f.fast, "use the RWA Hamiltonian instead of the full one");
  cmd->add_option("--jobs", f.jobs, "worker threads");
}

ex::ExperimentConfig resolve(const CommonFlags& f) {
  ex::ExperimentConfig c = f.config.empty() ? ex::default_config() : ex::load_config(f.config);
  if (!f.out.empty()) c.output = f.out;
  if (!f.mode.empty()) c.mode = catcsum::protocol::gate_mode_from_string(f.mode);
  if (f.cutoff) c.fock_cutoff = *f.cutoff;
  if (f.dt_scale) c.dt_scale = *f.dt_scale;
  if (f.jobs) c.jobs = *f.jobs;
  if (f.fast) {
    using catcsum::protocol::GateMode;
    if (c.mode == GateMode::full_lindblad) c.mode = GateMode::rwa_lindblad;
    if (c.mode == GateMode::full) c.mode = GateMode::rwa;
  }
  c.validate();
  return c;
}

void error_line(const std::string& code, const std::string& message) {
  std::cerr << nlohmann::json{{"status", "error"}, {"code", code}, {"message", message}}.dump()
            << "\n";
}

int sweep_command(const ex::ExperimentConfig& config, const std::vector<ex::SweepPoint>& points) {
  const auto records = ex::run_sweep(config, points, [&](std::size_t i, const ex::SweepRecord& r) {
    std::cerr << "[" << i + 1 << "/" << points.size() << "] kappa_inv=" << r.point.kappa_inv_us
              << " T=" << r.point.timescale_us << " delta=" << r.point.delta
              << " F=" << ex::format_double(r.fidelity) << " (" << r.runtime_s << " s)\n";
  });
  ex::write_file(config.output, ex::write_csv(ex::sweep_table(records)));
  std::cerr << "wrote " << config.output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid qutrit CSUM gate simulator"};
  app.require_subcommand(1);
  CommonFlags flags;

  auto* kappa = app.add_subcommand("sweep-kappa", "fidelity over the (kappa^-1, T) grid");
  auto* delta = app.add_subcommand("sweep-delta", "fidelity over the (delta, kappa^-1) grid");
  auto* report = app.add_subcommand("report", "gate time, Q factors, coupling ratios, cat overlaps");
  auto* validate = app.add_subcommand("validate", "run the invariant suite on a config");
  for (auto* cmd : {kappa, delta, report, validate}) add_common(cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_line("usage", e.what());
    return kExitUsage;
  }

  try {
    const ex::ExperimentConfig config = resolve(flags);
    if (kappa->parsed()) return sweep_command(config, ex::kappa_sweep_points(config));
    if (delta->parsed()) return sweep_command(config, ex::delta_sweep_points(config));
    if (report->parsed()) {
      const std::string csv = ex::write_csv(ex::report_table(ex::report_scalars(config)));
      if (flags.out.empty()) {
        std::cout << csv;
      } else {
        ex::write_file(flags.out, csv);
      }
      return 0;
    }
    const auto checks = ex::validate_config(config);
    nlohmann::json lines = nlohmann::json::array();
    for (const auto& c : checks) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " value=" << ex::format_double(c.value)
                << " threshold=" << ex::format_double(c.threshold) << "\n";
      if (!c.passed) lines.push_back(c.name);
    }
    if (!ex::all_passed(checks)) {
      error_line("validation_failed", "failing checks: " + lines.dump());
      return kExitValidation;
    }
    return 0;
  } catch (const catcsum::Error& e) {
    error_line(std::string(catcsum::to_string(e.code())), e.what());
    return kExitRuntime;
  } catch (const std::exception& e) {
    error_line("internal", e.what());
    return kExitRuntime;
  }
}
