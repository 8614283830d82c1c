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

#include <cmath>
#include <numbers>
#include <set>

#include <gtest/gtest.h>

#include "catcsum/core/cat.hpp"
#include "catcsum/core/fidelity.hpp"
#include "catcsum/dynamics/evolution.hpp"
#include "catcsum/error.hpp"
#include "catcsum/protocol/gate.hpp"
#include "catcsum/protocol/preparation.hpp"
#include "catcsum/protocol/run_gate.hpp"
#include "reference_values.hpp"

namespace catcsum::protocol {
namespace {

constexpr double kAlpha = 3.05;
const SystemDims kDims(40);

TEST(CsumTarget, TruthTableExamples) {
  for (int k = 0; k < 3; ++k) EXPECT_EQ(csum_target({0, k}), HybridBasisLabel(0, k));
  EXPECT_EQ(csum_target({1, 2}), HybridBasisLabel(1, 0));
  EXPECT_EQ(csum_target({2, 1}), HybridBasisLabel(2, 0));
  EXPECT_EQ(csum_target({2, 2}), HybridBasisLabel(2, 1));
}

TEST(CsumTarget, BijectionOfOrderThree) {
  std::set<std::pair<int, int>> images;
  for (const auto& label : all_labels()) {
    const auto image = csum_target(label);
    EXPECT_EQ(image.control, label.control);
    images.insert({image.control, image.target});
    EXPECT_EQ(csum_target(csum_target(csum_target(label))), label);
  }
  EXPECT_EQ(images.size(), 9u);
}

TEST(HybridBasisLabel, RangeChecked) {
  EXPECT_THROW(HybridBasisLabel(3, 0), Error);
  EXPECT_THROW(HybridBasisLabel(0, -1), Error);
  EXPECT_EQ(HybridBasisLabel(1, 2).str(), "|12>");
}

TEST(HybridBasisState, StructureAndGram) {
  const PureState s00 = hybrid_basis_state({0, 0}, kAlpha, kDims);
  QuquartVector q = QuquartVector::Zero();
  q(0) = 1.0;
  EXPECT_EQ((s00.amplitudes() - PureState::product(q, cat_codeword(0, kAlpha, 40)).amplitudes())
                .cwiseAbs()
                .maxCoeff(),
            0.0);
  const PureState s12 = hybrid_basis_state({1, 2}, kAlpha, kDims);
  const auto pops = s12.level_populations();
  EXPECT_EQ(pops[0] + pops[2] + pops[3], 0.0);

  const auto labels = all_labels();
  for (std::size_t i = 0; i < 9; ++i) {
    const PureState a = hybrid_basis_state(labels[i], kAlpha, kDims);
    for (std::size_t j = 0; j < 9; ++j) {
      const Complex g = a.inner(hybrid_basis_state(labels[j], kAlpha, kDims));
      if (i == j) {
        EXPECT_NEAR(std::abs(g), 1.0, 1e-12);
      } else {
        EXPECT_LT(std::norm(g), 1e-4);
      }
    }
  }
}

TEST(Pulses, ControlSuperposition) {
  const auto prep = prepare_control_superposition();
  const double s3 = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(std::abs(prep.after_first_pulse(0) - s3), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(prep.after_first_pulse(1) - std::sqrt(2.0 / 3.0)), 0.0, 1e-14);
  EXPECT_EQ(prep.after_first_pulse(2), Complex(0.0));
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(std::abs(prep.state(j) - s3), 0.0, 1e-14);
  EXPECT_EQ(prep.state(3), Complex(0.0));
  EXPECT_NEAR(prep.state.norm(), 1.0, 1e-15);
  EXPECT_NEAR(prep.pulses[0].duration * prep.pulses[0].rabi_frequency, std::acos(s3), 1e-15);
  EXPECT_NEAR(prep.pulses[1].duration * prep.pulses[1].rabi_frequency, std::numbers::pi / 4, 1e-15);
  EXPECT_DOUBLE_EQ(prep.pulses[0].phase, -std::numbers::pi / 2);
}

TEST(Pulses, RotationIsUnitaryAndValidated) {
  const PulseSpec p{Level::two, Level::b, 3.0, 0.4, 0.2};
  const QuquartMatrix u = pulse_rotation(p);
  EXPECT_LT((u * u.adjoint() - QuquartMatrix::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_THROW(pulse_rotation(PulseSpec{Level::zero, Level::one, 1.0, 0.0, -1.0}), Error);
  EXPECT_THROW(pulse_rotation(PulseSpec{Level::one, Level::one, 1.0, 0.0, 1.0}), Error);
  EXPECT_THROW(prepare_control_superposition(0.0, 1.0), Error);
}

TEST(InitialState, IdealAndPerturbed) {
  const PureState ideal = initial_state(0.0, kAlpha, kDims);
  QuquartVector q;
  q << 1.0, 1.0, 1.0, 0.0;
  const PureState uniform_product = PureState::product(q / std::sqrt(3.0), cat_codeword(0, kAlpha, 40));
  EXPECT_LT((ideal.amplitudes() - uniform_product.amplitudes()).cwiseAbs().maxCoeff(), 1e-15);
  const PureState pert = initial_state(0.1, kAlpha, kDims);
  EXPECT_NEAR(pert.norm(), 1.0, 1e-8);
  EXPECT_NEAR(std::abs(ideal.inner(pert)), reference::kPerturbedOverlap01, 1e-10);
  EXPECT_THROW(initial_state(1.0, kAlpha, kDims), Error);
  EXPECT_THROW(initial_state(-1.5, kAlpha, kDims), Error);
}

TEST(TargetEntangledState, Properties) {
  const PureState target = target_entangled_state(kAlpha, kDims);
  const auto shifts = model::dispersive_shifts(model::DeviceParams::reference());
  const PureState evolved =
      dynamics::evolve_effective_analytic(shifts, initial_state(0.0, kAlpha, kDims), model::gate_time(shifts));
  EXPECT_GE(fidelity(target, evolved), 1.0 - 1e-4);
  const auto pops = target.level_populations();
  for (int j = 0; j < 3; ++j) EXPECT_NEAR(pops[j], 1.0 / 3.0, 1e-4);
  EXPECT_EQ(pops[3], 0.0);
  EXPECT_NEAR(std::abs(hybrid_basis_state({0, 0}, kAlpha, kDims).inner(target)), 1.0 / std::sqrt(3.0), 1e-4);
}

TEST(GateMode, Names) {
  for (auto m : {GateMode::effective_analytic, GateMode::rwa, GateMode::full, GateMode::rwa_lindblad,
                 GateMode::full_lindblad}) {
    EXPECT_EQ(gate_mode_from_string(to_string(m)), m);
  }
  EXPECT_THROW(gate_mode_from_string("lindblad"), Error);
  EXPECT_TRUE(is_open_system(GateMode::full_lindblad));
  EXPECT_FALSE(is_open_system(GateMode::full));
}

TEST(RunGate, EffectiveAnalyticTruthTableAndUnitarity) {
  const auto device = model::DeviceParams::reference();
  std::vector<PureState> in, out;
  for (const auto& label : all_labels()) {
    in.push_back(hybrid_basis_state(label, kAlpha, kDims));
    const auto r = run_gate(GateMode::effective_analytic, device, std::nullopt, in.back());
    EXPECT_GE(r.fidelity_against(hybrid_basis_state(csum_target(label), kAlpha, kDims)), 1.0 - 1e-4)
        << label.str();
    EXPECT_NEAR(r.gate_time, reference::kGateTimeUs, 1e-15);
    out.push_back(std::get<PureState>(r.final_state));
    const auto before = in.back().level_populations();
    const auto after = out.back().level_populations();
    for (int j = 0; j < 4; ++j) EXPECT_NEAR(before[j], after[j], 1e-6);
  }
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      EXPECT_LT(std::abs(out[i].inner(out[j]) - in[i].inner(in[j])), 1e-8);
}

TEST(RunGate, OpenSystemRequiresDecoherence) {
  const auto psi = initial_state(0.0, kAlpha, SystemDims(30));
  EXPECT_THROW(run_gate(GateMode::full_lindblad, model::DeviceParams::reference(), std::nullopt, psi), Error);
}

TEST(RunGate, RwaAgainstOracle) {
  const auto device = model::DeviceParams::reference();
  const auto psi = hybrid_basis_state({1, 1}, kAlpha, kDims);
  GateRunOptions opt;
  opt.dt_scale = 0.25;
  const auto r = run_gate(GateMode::rwa, device, std::nullopt, psi, opt);
  EXPECT_NEAR(r.fidelity, reference::kRwaFidelityLevel1, 1e-6);
  EXPECT_GE(r.fidelity, 0.0);
  EXPECT_LE(r.fidelity, 1.0);
  EXPECT_EQ(r.fock_cutoff, 40);
  EXPECT_GT(r.n_steps, 0);
}

TEST(RunGate, FullLindbladAgainstOracle) {
  const auto dec = model::DecoherenceParams::from_timescale(20.0, 100.0);
  const auto r = run_gate(GateMode::full_lindblad, model::DeviceParams::reference(), dec,
                          initial_state(0.0, kAlpha, kDims));
  EXPECT_NEAR(r.fidelity, reference::kFullLindbladFidelity100us20us, 1e-5);
  EXPECT_LE(r.trace_drift, 1e-6);
  EXPECT_GE(r.min_eigenvalue, -1e-6);
}

TEST(PhaseCompensatedFidelity, PureAndMixedAgree) {
  const auto device = model::DeviceParams::reference();
  const auto r = run_gate(GateMode::rwa, device, std::nullopt, initial_state(0.0, kAlpha, kDims));
  const PureState& raw = std::get<PureState>(r.final_state);
  const PureState out = PureState::normalized(raw.dims(), raw.amplitudes());
  const double pure = phase_compensated_fidelity(r.ideal_state, out);
  const double mixed = phase_compensated_fidelity(r.ideal_state, DensityMatrix::from_pure(out));
  EXPECT_NEAR(pure, mixed, 1e-9);
  EXPECT_GE(pure, r.fidelity - 1e-12);
}

TEST(PhaseCompensatedFidelity, UndoesLocalPhases) {
  const PureState target = target_entangled_state(kAlpha, kDims);
  Eigen::VectorXcd v = target.amplitudes();
  const double phases[] = {0.3, -1.1, 2.4, 0.0};
  for (int j = 0; j < 4; ++j) v.segment(j * 40, 40) *= std::polar(1.0, phases[j]);
  const PureState shifted(kDims, v);
  EXPECT_LT(fidelity(target, shifted), 0.9);
  EXPECT_NEAR(phase_compensated_fidelity(target, DensityMatrix::from_pure(shifted)), 1.0, 1e-9);
}

TEST(RunGate, FidelityNonIncreasingInKappa) {
  const SystemDims dims(30);
  const auto device = model::DeviceParams::reference();
  const auto psi = initial_state(0.0, kAlpha, dims);
  double previous = 1.0;
  for (double kappa_inv : {150.0, 50.0, 10.0}) {
    const auto r = run_gate(GateMode::rwa_lindblad, device,
                            model::DecoherenceParams::from_timescale(20.0, kappa_inv), psi);
    EXPECT_LE(r.fidelity, previous + 1e-12) << kappa_inv;
    EXPECT_LE(r.trace_drift, 1e-6);
    previous = r.fidelity;
  }
}

}  // namespace
}  // namespace catcsum::protocol
