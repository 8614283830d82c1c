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

#include <random>

#include <benchmark/benchmark.h>

#include "catcsum/core/cat.hpp"
#include "catcsum/dynamics/banded_operator.hpp"
#include "catcsum/dynamics/evolution.hpp"
#include "catcsum/model/collapse.hpp"
#include "catcsum/model/hamiltonians.hpp"
#include "catcsum/protocol/preparation.hpp"
#include "catcsum/protocol/run_gate.hpp"

namespace {

using namespace catcsum;
using dynamics::RowMatrix;

constexpr double kAlpha = 3.05;

RowMatrix random_matrix(int d) {
  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  RowMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return m;
}

dynamics::EvolutionConfig window(const dynamics::TimeDependentOperator& h, int steps) {
  auto cfg = dynamics::EvolutionConfig::for_operator(h, 1.0);
  cfg.t_final = cfg.dt * steps;
  return cfg;
}

void BM_BandedMultiplyAdd(benchmark::State& state) {
  const SystemDims dims(static_cast<int>(state.range(0)));
  const auto h = model::hamiltonian_full(model::DeviceParams::reference(), dims);
  const auto op = dynamics::BandedOperator::from_sparse(dims, h.evaluate(0.1).data());
  const RowMatrix rho = random_matrix(dims.total_dim());
  RowMatrix out = RowMatrix::Zero(dims.total_dim(), dims.total_dim());
  for (auto _ : state) {
    op.multiply_add(rho, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_BandedMultiplyAdd)->Arg(20)->Arg(40)->Arg(50);

void BM_BandedSandwichAdd(benchmark::State& state) {
  const SystemDims dims(static_cast<int>(state.range(0)));
  const auto op = dynamics::BandedOperator::from_sparse(dims, annihilation(dims).data());
  const RowMatrix rho = random_matrix(dims.total_dim());
  RowMatrix out = RowMatrix::Zero(dims.total_dim(), dims.total_dim());
  for (auto _ : state) {
    op.sandwich_add(rho, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_BandedSandwichAdd)->Arg(20)->Arg(40)->Arg(50);

void BM_FullHamiltonianEvaluate(benchmark::State& state) {
  const SystemDims dims(40);
  const auto h = model::hamiltonian_full(model::DeviceParams::reference(), dims);
  SparseMatrix out = h.evaluate(0.0).data();
  double t = 0.0;
  for (auto _ : state) {
    h.evaluate_into(t, out);
    t += 1e-6;
    benchmark::DoNotOptimize(out.valuePtr());
  }
}
BENCHMARK(BM_FullHamiltonianEvaluate);

void BM_SchrodingerSteps(benchmark::State& state) {
  const SystemDims dims(40);
  const auto h = model::hamiltonian_full(model::DeviceParams::reference(), dims);
  const auto psi = protocol::initial_state(0.0, kAlpha, dims);
  const auto cfg = window(h, 100);
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::evolve_schrodinger(h, psi, cfg));
  state.SetItemsProcessed(state.iterations() * 100);
}
BENCHMARK(BM_SchrodingerSteps)->Unit(benchmark::kMillisecond);

void BM_LindbladSteps(benchmark::State& state) {
  const SystemDims dims(static_cast<int>(state.range(0)));
  const auto h = model::hamiltonian_full(model::DeviceParams::reference(), dims);
  const auto ops = model::collapse_matrices(
      model::collapse_operators(model::DecoherenceParams::from_timescale(20.0, 100.0), dims));
  const auto rho = DensityMatrix::from_pure(protocol::initial_state(0.0, kAlpha, dims));
  const auto cfg = window(h, 20);
  for (auto _ : state) benchmark::DoNotOptimize(dynamics::evolve_lindblad(h, ops, rho, cfg));
  state.SetItemsProcessed(state.iterations() * 20);
}
BENCHMARK(BM_LindbladSteps)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EffectiveAnalyticGate(benchmark::State& state) {
  const SystemDims dims(40);
  const auto device = model::DeviceParams::reference();
  const auto psi = protocol::initial_state(0.0, kAlpha, dims);
  for (auto _ : state)
    benchmark::DoNotOptimize(protocol::run_gate(protocol::GateMode::effective_analytic, device, std::nullopt, psi));
}
BENCHMARK(BM_EffectiveAnalyticGate);

}  // namespace

BENCHMARK_MAIN();
