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

#include "catcsum/experiments/sweep.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "catcsum/protocol/preparation.hpp"

namespace catcsum::experiments {

std::vector<SweepPoint> kappa_sweep_points(const ExperimentConfig& config) {
  std::vector<SweepPoint> out;
  for (double t : config.timescales_us) {
    for (double k : config.kappa_inv_us) out.push_back({k, t, 0.0});
  }
  return out;
}

std::vector<SweepPoint> delta_sweep_points(const ExperimentConfig& config) {
  std::vector<SweepPoint> out;
  for (double k : config.delta_kappa_inv_us) {
    for (double d : config.deltas) out.push_back({k, config.delta_timescale_us, d});
  }
  return out;
}

SweepRecord run_point(const ExperimentConfig& config, const SweepPoint& point) {
  const auto start = std::chrono::steady_clock::now();
  const model::DeviceParams device = config.device.to_device();
  const SystemDims dims(config.fock_cutoff);
  const PureState psi0 = protocol::initial_state(point.delta, device.alpha, dims);
  const auto dec = model::DecoherenceParams::from_timescale(point.timescale_us, point.kappa_inv_us);

  protocol::GateRunOptions options;
  options.dt_scale = config.dt_scale;
  options.points_per_period = config.points_per_period;
  const protocol::GateRunResult r = protocol::run_gate(config.mode, device, dec, psi0, options);

  SweepRecord rec;
  rec.point = point;
  rec.mode = config.mode;
  rec.fock_cutoff = r.fock_cutoff;
  rec.dt_us = r.dt;
  rec.n_steps = r.n_steps;
  rec.fidelity = r.fidelity;
  rec.fidelity_entangled = r.fidelity_against(protocol::target_entangled_state(device.alpha, dims));
  rec.fidelity_zcorr = r.phase_compensated_fidelity(r.ideal_state);
  rec.trace_drift = r.trace_drift;
  rec.b_population_max = r.b_population_max;
  rec.min_eigenvalue = r.min_eigenvalue;
  rec.runtime_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config,
                                   const std::vector<SweepPoint>& points,
                                   const ProgressFn& progress) {
  config.validate();
  std::vector<SweepRecord> records(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex mutex;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      try {
        records[i] = run_point(config, points[i]);
        if (progress) {
          std::lock_guard lock(mutex);
          progress(i, records[i]);
        }
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
    }
  };

  const std::size_t n_workers =
      std::min<std::size_t>(static_cast<std::size_t>(config.jobs), std::max<std::size_t>(points.size(), 1));
  std::vector<std::thread> threads;
  for (std::size_t w = 1; w < n_workers; ++w) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

std::vector<std::string> sweep_csv_header() {
  return {"kappa_inv_us",   "T_us",           "delta",          "mode",
          "fock_cutoff",    "dt_us",          "n_steps",        "fidelity",
          "fidelity_entangled", "fidelity_zcorr", "trace_drift", "b_population_max",
          "min_eigenvalue"};
}

CsvTable sweep_table(const std::vector<SweepRecord>& records) {
  CsvTable table;
  table.header = sweep_csv_header();
  for (const auto& r : records) {
    table.rows.push_back({format_double(r.point.kappa_inv_us), format_double(r.point.timescale_us),
                          format_double(r.point.delta), std::string(protocol::to_string(r.mode)),
                          std::to_string(r.fock_cutoff), format_double(r.dt_us),
                          std::to_string(r.n_steps), format_double(r.fidelity),
                          format_double(r.fidelity_entangled), format_double(r.fidelity_zcorr),
                          format_double(r.trace_drift), format_double(r.b_population_max),
                          format_double(r.min_eigenvalue)});
  }
  return table;
}

}  // namespace catcsum::experiments
