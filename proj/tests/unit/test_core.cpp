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
#include <random>

#include <gtest/gtest.h>

#include "catcsum/core/cat.hpp"
#include "catcsum/core/fidelity.hpp"
#include "catcsum/core/operators.hpp"
#include "catcsum/error.hpp"
#include "reference_values.hpp"

namespace catcsum {
namespace {

constexpr double kAlpha = 3.05;
constexpr int kCutoff = 40;

Eigen::VectorXcd random_vector(std::mt19937& rng, int n) {
  std::normal_distribution<double> dist;
  Eigen::VectorXcd v(n);
  for (int i = 0; i < n; ++i) v(i) = Complex(dist(rng), dist(rng));
  return v.normalized();
}

TEST(SystemDims, LayoutAndBounds) {
  SystemDims dims(7);
  EXPECT_EQ(dims.total_dim(), 28);
  EXPECT_EQ(SystemDims::ququart_dim(), 4);
  EXPECT_EQ(dims.index(Level::b, 2), 3 * 7 + 2);
  EXPECT_THROW(SystemDims(1), Error);
  EXPECT_NO_THROW(SystemDims(2));
  EXPECT_EQ(level_from_index(3), Level::b);
  EXPECT_THROW(level_from_index(4), Error);
}

TEST(PureState, NormInvariant) {
  SystemDims dims(3);
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(12);
  v(0) = 1.0 + 1e-9;
  EXPECT_NO_THROW(PureState(dims, v));
  v(0) = 1.1;
  try {
    PureState bad(dims, v);
    FAIL() << "expected invalid_state";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_state);
  }
  EXPECT_THROW(PureState(dims, Eigen::VectorXcd::Ones(5).normalized()), Error);
}

TEST(DensityMatrix, Invariants) {
  SystemDims dims(2);
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(8, 8);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.5;
  EXPECT_NO_THROW(DensityMatrix(dims, rho));

  Eigen::MatrixXcd bad_trace = rho * 1.01;
  EXPECT_THROW(DensityMatrix(dims, bad_trace), Error);

  Eigen::MatrixXcd non_hermitian = rho;
  non_hermitian(0, 1) = 1e-6;
  EXPECT_THROW(DensityMatrix(dims, non_hermitian), Error);

  Eigen::MatrixXcd negative = rho;
  negative(0, 0) = 1.1;
  negative(1, 1) = -0.1;
  EXPECT_THROW(DensityMatrix(dims, negative), Error);
}

TEST(CoherentState, VacuumIsExact) {
  const CavityState c = coherent_state(0.0, 10);
  EXPECT_EQ(c.amplitudes()(0), Complex(1.0));
  EXPECT_EQ(c.amplitudes().tail(9).cwiseAbs().maxCoeff(), 0.0);
}

TEST(CoherentState, MeanPhotonNumber) {
  const CavityState c = coherent_state(kAlpha, kCutoff);
  double mean = 0.0;
  for (int n = 0; n < kCutoff; ++n) mean += n * std::norm(c.amplitudes()(n));
  EXPECT_NEAR(mean, reference::kMeanPhotonAlpha305N40, 1e-10);
  EXPECT_NEAR(mean, kAlpha * kAlpha, 1e-6);
  EXPECT_NEAR(c.amplitudes().norm(), 1.0, 1e-12);
  EXPECT_LT(c.leakage(), 1e-8);
}

TEST(CoherentState, ClosedFormOverlap) {
  const CavityState a = coherent_state(1.0, 30);
  const CavityState b = coherent_state(Complex(0.0, 1.0), 30);
  const Complex ov = a.inner(b);
  EXPECT_NEAR(ov.real(), reference::kOverlapOneIRe, 1e-8);
  EXPECT_NEAR(ov.imag(), reference::kOverlapOneIIm, 1e-8);
}

TEST(CoherentState, CutoffTooSmall) {
  try {
    coherent_state(kAlpha, 12);
    FAIL() << "expected cutoff_too_small";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cutoff_too_small);
  }
  EXPECT_LE(recommended_cutoff(kAlpha), kCutoff);
}

TEST(CatCodeword, EvenParityAndNorm) {
  for (int k = 0; k < 3; ++k) {
    const CavityState c = cat_codeword(k, kAlpha, kCutoff);
    EXPECT_NEAR(c.amplitudes().norm(), 1.0, 1e-8);
    for (int n = 1; n < kCutoff; n += 2) EXPECT_EQ(c.amplitudes()(n), Complex(0.0)) << n;
  }
  EXPECT_THROW(cat_codeword(3, kAlpha, kCutoff), Error);
  EXPECT_THROW(cat_codeword(-1, kAlpha, kCutoff), Error);
  EXPECT_THROW(cat_codeword(0, 0.0, kCutoff), Error);
}

TEST(CatCode, QuasiOrthogonality) {
  const CatCode code(kAlpha, kCutoff);
  const Eigen::Matrix3cd g = code.overlap_matrix();
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(std::abs(g(k, k)), 1.0, 1e-12);
    for (int l = 0; l < 3; ++l) {
      if (k != l) EXPECT_NEAR(std::norm(g(k, l)), reference::kCatOverlapSq305, 1e-12);
    }
  }
  EXPECT_LT(code.max_offdiagonal_overlap_sq(), 1e-4);
  EXPECT_NEAR(code.analytic_norm(), 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * kAlpha * kAlpha))),
              1e-15);
}

TEST(CatCode, OrthogonalityImprovesWithAlpha) {
  const double expected[] = {reference::kCatOverlapSq305, reference::kCatOverlapSq350,
                             reference::kCatOverlapSq400};
  const double alphas[] = {3.05, 3.5, 4.0};
  double previous = 1.0;
  for (int i = 0; i < 3; ++i) {
    const double v = CatCode(alphas[i], 50).max_offdiagonal_overlap_sq();
    EXPECT_NEAR(v, expected[i], 1e-12 + 1e-8 * expected[i]);
    EXPECT_LT(v, previous);
    previous = v;
  }
}

TEST(CatState, PeriodicInPi) {
  for (double theta : {0.0, 0.4, 1.3}) {
    const auto a = cat_state(kAlpha, theta, kCutoff).amplitudes();
    const auto b = cat_state(kAlpha, theta + std::numbers::pi, kCutoff).amplitudes();
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Operators, LadderAlgebra) {
  SystemDims dims(6);
  const Operator a = annihilation(dims);
  const Operator ad = creation(dims);
  EXPECT_EQ((ad.dense() - a.dense().adjoint()).cwiseAbs().maxCoeff(), 0.0);
  const Eigen::MatrixXcd comm = (a * ad - ad * a).dense();
  for (int level = 0; level < 4; ++level) {
    for (int n = 0; n < 5; ++n) {
      const int i = dims.index(level, n);
      EXPECT_NEAR(std::abs(comm(i, i) - 1.0), 0.0, 1e-14);
    }
  }
  EXPECT_NEAR(a.dense()(dims.index(0, 2), dims.index(0, 3)).real(), std::sqrt(3.0), 1e-15);
}

TEST(Operators, NumberExpectationOfCoherent) {
  SystemDims dims(kCutoff);
  QuquartVector q = QuquartVector::Zero();
  q(1) = 1.0;
  const PureState psi = PureState::product(q, coherent_state(kAlpha, kCutoff));
  EXPECT_NEAR(number_op(dims).expectation(psi).real(), reference::kMeanPhotonAlpha305N40, 1e-10);
}

TEST(Operators, ProjectorAlgebra) {
  SystemDims dims(4);
  const Operator prod =
      ququart_transition(Level::b, Level::one, dims) * ququart_transition(Level::one, Level::b, dims);
  EXPECT_EQ((prod.dense() - ququart_projector(Level::b, dims).dense()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_THROW(ququart_transition(4, 0, dims), Error);
  EXPECT_THROW(ququart_projector(-1, dims), Error);
}

TEST(Operators, HermitianFlagIsChecked) {
  SystemDims dims(3);
  EXPECT_NO_THROW(Operator(dims, number_op(dims).data(), true));
  EXPECT_THROW(Operator(dims, annihilation(dims).data(), true), Error);
}

TEST(Operators, DimensionMismatch) {
  EXPECT_THROW(annihilation(SystemDims(3)) * annihilation(SystemDims(4)), Error);
}

TEST(Operators, TensorProductConsistency) {
  std::mt19937 rng(7);
  std::normal_distribution<double> dist;
  SystemDims dims(5);
  for (int trial = 0; trial < 5; ++trial) {
    QuquartMatrix a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    Eigen::MatrixXcd bd(5, 5);
    for (int i = 0; i < 5; ++i)
      for (int j = 0; j < 5; ++j) bd(i, j) = Complex(dist(rng), dist(rng));
    const SparseMatrix b = bd.sparseView();
    const Eigen::MatrixXcd lhs = (lift_ququart(a, dims) * lift_cavity(b, dims)).dense();
    const Eigen::MatrixXcd rhs = Eigen::MatrixXcd(kron(a, b));
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Fidelity, SpecialCases) {
  SystemDims dims(3);
  const PureState psi = PureState::basis(dims, Level::zero, 1);
  const PureState phi = PureState::basis(dims, Level::two, 0);
  EXPECT_DOUBLE_EQ(fidelity(psi, DensityMatrix::from_pure(psi)), 1.0);
  EXPECT_DOUBLE_EQ(fidelity(psi, DensityMatrix::from_pure(phi)), 0.0);
  const Eigen::MatrixXcd mix =
      0.5 * DensityMatrix::from_pure(psi).data() + 0.5 * DensityMatrix::from_pure(phi).data();
  EXPECT_NEAR(fidelity(psi, DensityMatrix(dims, mix)), std::sqrt(0.5), 1e-15);
  EXPECT_THROW(fidelity(psi, DensityMatrix::from_pure(PureState::basis(SystemDims(4), Level::zero, 0))),
               Error);
}

TEST(Fidelity, PurePureMatchesMixed) {
  std::mt19937 rng(11);
  SystemDims dims(4);
  for (int trial = 0; trial < 10; ++trial) {
    const PureState a(dims, random_vector(rng, 16));
    const PureState b(dims, random_vector(rng, 16));
    EXPECT_NEAR(fidelity(a, b), fidelity(a, DensityMatrix::from_pure(b)), 1e-12);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-12);
    EXPECT_GE(fidelity(a, b), 0.0);
    EXPECT_LE(fidelity(a, b), 1.0);
  }
}

TEST(RotateCavityPhase, CoherentAndCatRotation) {
  const double theta = 0.7;
  EXPECT_LT((rotate_cavity_phase(coherent_state(kAlpha, kCutoff), 0.0).amplitudes() -
             coherent_state(kAlpha, kCutoff).amplitudes())
                .cwiseAbs()
                .maxCoeff(),
            1e-15);
  const CavityState rotated = rotate_cavity_phase(coherent_state(kAlpha, kCutoff), theta);
  const CavityState expected = coherent_state(std::polar(kAlpha, theta), kCutoff);
  EXPECT_GE(std::abs(rotated.inner(expected)), 1.0 - 1e-8);

  const CavityState c1 = rotate_cavity_phase(cat_codeword(0, kAlpha, kCutoff), std::numbers::pi / 3);
  EXPECT_LT((c1.amplitudes() - cat_codeword(1, kAlpha, kCutoff).amplitudes()).cwiseAbs().maxCoeff(),
            1e-8);
}

TEST(RotateCavityPhase, Composition) {
  std::mt19937 rng(3);
  SystemDims dims(6);
  const PureState psi(dims, random_vector(rng, 24));
  const DensityMatrix rho = DensityMatrix::from_pure(psi);
  for (auto [t1, t2] : {std::pair{0.3, 1.1}, std::pair{-2.0, 0.25}}) {
    const auto lhs = rotate_cavity_phase(rotate_cavity_phase(psi, t1), t2).amplitudes();
    const auto rhs = rotate_cavity_phase(psi, t1 + t2).amplitudes();
    EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-10);
    const auto lr = rotate_cavity_phase(rotate_cavity_phase(rho, t1), t2).data();
    const auto rr = rotate_cavity_phase(rho, t1 + t2).data();
    EXPECT_LT((lr - rr).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(PureState, ReducedQuquartAndPopulations) {
  QuquartVector q;
  q << 0.6, 0.0, Complex(0.0, 0.8), 0.0;
  const PureState psi = PureState::product(q, cat_codeword(2, kAlpha, kCutoff));
  const auto pops = psi.level_populations();
  EXPECT_NEAR(pops[0], 0.36, 1e-14);
  EXPECT_NEAR(pops[2], 0.64, 1e-14);
  EXPECT_EQ(pops[1], 0.0);
  const Eigen::Matrix4cd red = psi.ququart_reduced();
  EXPECT_LT((red - q * q.adjoint()).cwiseAbs().maxCoeff(), 1e-14);
  const auto rho_pops = DensityMatrix::from_pure(psi).level_populations();
  for (int j = 0; j < 4; ++j) EXPECT_NEAR(rho_pops[j], pops[j], 1e-14);
}

}  // namespace
}  // namespace catcsum
