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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "catcsum/error.hpp"
#include "catcsum/model/collapse.hpp"
#include "catcsum/model/hamiltonians.hpp"
#include "reference_values.hpp"

namespace catcsum::model {
namespace {

double max_abs(const SparseMatrix& m) {
  double v = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(m, k); it; ++it) v = std::max(v, std::abs(it.value()));
  return v;
}

Eigen::MatrixXcd dense_at(const dynamics::TimeDependentOperator& h, double t) {
  return h.evaluate(t).dense();
}

TEST(DeviceParams, ReferenceValues) {
  const DeviceParams p = DeviceParams::reference();
  EXPECT_NEAR(rad_per_us_to_ghz(p.omega_c), 10.5, 1e-12);
  EXPECT_NEAR(rad_per_us_to_ghz(p.transition_frequency(Transition::t1b)), 14.5, 1e-12);
  EXPECT_NEAR(rad_per_us_to_ghz(p.detuning(Transition::t2b)), 2.0, 1e-12);
  EXPECT_NEAR(rad_per_us_to_mhz(p.coupling(Transition::t12)), 120.0, 1e-12);
  EXPECT_NEAR(rad_per_us_to_mhz(p.coupling(Transition::t0b)), 12.0, 1e-12);
  EXPECT_DOUBLE_EQ(p.alpha, 3.05);
}

TEST(DispersiveShifts, ReferenceLambdas) {
  const DispersiveShifts s = dispersive_shifts(DeviceParams::reference());
  EXPECT_NEAR(rad_per_us_to_mhz(s.lambda1), reference::kLambda1Over2PiMHz, 1e-12);
  EXPECT_NEAR(s.lambda2, 2.0 * s.lambda1, 1e-9);
  EXPECT_NEAR(s.relative_mismatch(), 0.0, 1e-12);
}

TEST(GateCondition, Reference) {
  const GateCondition c = validate_gate_condition(DeviceParams::reference());
  EXPECT_NEAR(c.gate_time, reference::kGateTimeUs, 1e-15);
  EXPECT_NEAR(c.gate_time, 0.0463, 0.0463 * 0.01);
  EXPECT_NEAR(c.relative_mismatch, 0.0, 1e-12);
}

TEST(GateCondition, MismatchCases) {
  DeviceParams p = DeviceParams::reference();
  // Delta_2b = Delta_1b with g_2b = sqrt(2) g_1b satisfies the condition.
  p.set(Transition::t2b, p.transition_frequency(Transition::t1b),
        std::sqrt(2.0) * p.coupling(Transition::t1b));
  EXPECT_NEAR(validate_gate_condition(p).relative_mismatch, 0.0, 1e-12);
  p.set(Transition::t2b, p.transition_frequency(Transition::t1b), p.coupling(Transition::t1b));
  EXPECT_NEAR(validate_gate_condition(p).relative_mismatch, 1.0, 1e-12);
  p.set(Transition::t1b, p.transition_frequency(Transition::t1b), 0.0);
  EXPECT_THROW(validate_gate_condition(p), Error);
}

TEST(DispersiveValidity, RatiosAndFlags) {
  const auto checks = dispersive_validity(DeviceParams::reference());
  ASSERT_EQ(checks.size(), 2u);
  EXPECT_NEAR(checks[0].ratio, 4000.0 / 120.0, 1e-9);
  EXPECT_NEAR(checks[1].ratio, 2000.0 / 120.0, 1e-9);
  EXPECT_TRUE(checks[0].valid && checks[1].valid);
  DeviceParams p = DeviceParams::reference();
  p.set(Transition::t2b, p.omega_c + mhz_to_rad_per_us(600.0), p.coupling(Transition::t2b));
  EXPECT_FALSE(dispersive_validity(p)[1].valid);
}

TEST(HamiltonianRwa, HermitianAndMatrixElements) {
  SystemDims dims(8);
  const DeviceParams p = DeviceParams::reference();
  const auto h = hamiltonian_rwa(p, dims);
  for (double t : {0.0, 0.013}) {
    const Eigen::MatrixXcd m = dense_at(h, t);
    EXPECT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
  const Eigen::MatrixXcd m0 = dense_at(h, 0.0);
  for (int n = 1; n <= 3; ++n) {
    EXPECT_NEAR(std::abs(m0(dims.index(Level::b, n - 1), dims.index(Level::one, n)) -
                         p.coupling(Transition::t1b) * std::sqrt(double(n))),
                0.0, 1e-9);
  }
  EXPECT_NEAR(h.max_frequency(), p.detuning(Transition::t1b), 1e-9);
}

TEST(HamiltonianRwa, NoLevelTwoCouplingWithoutG2b) {
  SystemDims dims(6);
  DeviceParams p = DeviceParams::reference();
  p.set(Transition::t2b, p.transition_frequency(Transition::t2b), 0.0);
  const Eigen::MatrixXcd m = dense_at(hamiltonian_rwa(p, dims), 0.021);
  EXPECT_EQ(m.middleRows(2 * 6, 6).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(m.middleCols(2 * 6, 6).cwiseAbs().maxCoeff(), 0.0);
}

TEST(HamiltonianFull, MaxFrequencyAndHermiticity) {
  SystemDims dims(6);
  const DeviceParams p = DeviceParams::reference();
  const auto h = hamiltonian_full(p, dims);
  EXPECT_NEAR(h.max_frequency(), ghz_to_rad_per_us(25.0), 1e-6);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> t(0.0, 0.05);
  for (int i = 0; i < 100; ++i) {
    const Eigen::MatrixXcd m = dense_at(h, t(rng));
    ASSERT_LE((m - m.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(HamiltonianFull, ReducesToRwa) {
  SystemDims dims(6);
  DeviceParams p = DeviceParams::reference();
  for (Transition t : {Transition::t0b, Transition::t01, Transition::t02, Transition::t12}) {
    p.set(t, p.transition_frequency(t), 0.0);
  }
  const auto full = hamiltonian_full(p, dims, FullTermSelection{false, true});
  const auto rwa = hamiltonian_rwa(p, dims);
  const auto subset = hamiltonian_full(DeviceParams::reference(), dims, FullTermSelection{false, false});
  for (double t : {0.0, 0.0071, 0.0333}) {
    EXPECT_EQ((dense_at(full, t) - dense_at(rwa, t)).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ((dense_at(subset, t) - dense_at(rwa, t)).cwiseAbs().maxCoeff(), 0.0);
  }
}

TEST(HamiltonianFull, CounterRotatingStructure) {
  SystemDims dims(5);
  const DeviceParams p = DeviceParams::reference();
  const auto h = hamiltonian_full(p, dims);
  const Eigen::MatrixXcd m = dense_at(h, 0.0);
  // a^+ |b><1|: |1, n> -> |b, n+1> with g_1b sqrt(n+1) (co-rotating part is |b, n-1>).
  EXPECT_NEAR(std::abs(m(dims.index(Level::b, 2), dims.index(Level::one, 1))),
              p.coupling(Transition::t1b) * std::sqrt(2.0), 1e-9);
  // 02 term: a |2><0|.
  EXPECT_NEAR(std::abs(m(dims.index(Level::two, 0), dims.index(Level::zero, 1))),
              p.coupling(Transition::t02) + 0.0, 1e-9);
}

TEST(HamiltonianEffective, DiagonalForms) {
  SystemDims dims(6);
  const DispersiveShifts s = dispersive_shifts(DeviceParams::reference());
  const Eigen::MatrixXcd without_b = hamiltonian_effective(s, dims, false).dense();
  const Eigen::MatrixXcd with_b = hamiltonian_effective(s, dims, true).dense();
  EXPECT_NEAR(without_b(dims.index(Level::one, 3), dims.index(Level::one, 3)).real(), -3.0 * s.lambda1, 1e-12);
  for (int n = 0; n < 6; ++n) EXPECT_EQ(without_b(dims.index(Level::zero, n), dims.index(Level::zero, n)), Complex(0.0));
  EXPECT_EQ((without_b - Eigen::MatrixXcd(without_b.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 0.0);
  // With and without |b> they agree off the |b> block.
  EXPECT_EQ((with_b - without_b).topLeftCorner(18, 18).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_NEAR(with_b(dims.index(Level::b, 2), dims.index(Level::b, 2)).real(), (s.lambda1 + s.lambda2) * 3.0,
              1e-9);
}

TEST(DecoherenceParams, FromTimescale) {
  for (double t : {10.0, 20.0, 30.0}) {
    const auto d = DecoherenceParams::from_timescale(t, 100.0);
    EXPECT_NEAR(1.0 / d.gamma_0b, 5 * t, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_02, 5 * t, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_01, 5 * t, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_1b, t / 2, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_2b, t / 2, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_12, t, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_phi_b, t / 2, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_phi_2, t / 2, 1e-12);
    EXPECT_NEAR(1.0 / d.gamma_phi_0, 2.5 * t, 1e-12);
    EXPECT_NEAR(d.kappa, 0.01, 1e-15);
  }
  EXPECT_NEAR(DecoherenceParams::from_timescale(20.0, 100.0).gamma_1b, 0.1, 1e-15);
  EXPECT_THROW(DecoherenceParams::from_timescale(0.0, 100.0), Error);
  EXPECT_THROW(DecoherenceParams::from_timescale(20.0, -1.0), Error);
  DecoherenceParams bad;
  bad.gamma_12 = -1.0;
  EXPECT_THROW(bad.validate(), Error);
}

TEST(CollapseOperators, ChannelsAndScaling) {
  SystemDims dims(5);
  const auto none = collapse_operators(
      DecoherenceParams::from_timescale(std::numeric_limits<double>::infinity(),
                                        std::numeric_limits<double>::infinity()),
      dims);
  EXPECT_TRUE(none.empty());

  const auto dec = DecoherenceParams::from_timescale(20.0, 100.0);
  const auto ch = collapse_operators(dec, dims);
  EXPECT_EQ(ch.size(), 10u);
  for (const auto& c : ch) {
    // L^+ L has largest entry rate * (max cavity factor)^2.
    const double scale = c.name == "cavity_decay" ? 4.0 : 1.0;
    EXPECT_NEAR(max_abs(SparseMatrix(c.op.data().adjoint() * c.op.data())), c.rate * scale, 1e-12)
        << c.name;
  }
  const auto it = std::find_if(ch.begin(), ch.end(), [](const auto& c) { return c.name == "dephase_2"; });
  ASSERT_NE(it, ch.end());
  const Eigen::MatrixXcd d2 = it->op.dense();
  Eigen::MatrixXcd outside = d2;
  outside.block(10, 10, 5, 5).setZero();
  EXPECT_EQ(outside.cwiseAbs().maxCoeff(), 0.0);
  const Eigen::MatrixXcd expected = std::sqrt(dec.gamma_phi_2) * Eigen::MatrixXcd::Identity(5, 5);
  EXPECT_LT((d2.block(10, 10, 5, 5) - expected).cwiseAbs().maxCoeff(), 1e-15);
  const auto r01 = std::find_if(ch.begin(), ch.end(), [](const auto& c) { return c.name == "relax_0_to_1"; });
  ASSERT_NE(r01, ch.end());
  EXPECT_NEAR(std::abs(r01->op.dense()(dims.index(Level::one, 2), dims.index(Level::zero, 2))),
              std::sqrt(dec.gamma_01), 1e-15);
}

}  // namespace
}  // namespace catcsum::model
