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

#include "catcsum/core/states.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include <Eigen/Eigenvalues>

#include "catcsum/error.hpp"

namespace catcsum {

namespace {

void require_norm(double norm_sq, double tol) {
  if (!std::isfinite(norm_sq) || std::abs(norm_sq - 1.0) > tol) {
    std::ostringstream os;
    os << "state is not normalized: |psi|^2 = " << norm_sq;
    throw Error(ErrorCode::invalid_state, os.str());
  }
}

}  // namespace

double max_abs(const Eigen::MatrixXcd& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

CavityState::CavityState(Eigen::VectorXcd amplitudes, double leakage)
    : amplitudes_(std::move(amplitudes)), leakage_(leakage) {
  require_norm(amplitudes_.squaredNorm(), kNormTolerance);
}

CavityState CavityState::normalized(Eigen::VectorXcd amplitudes, double leakage) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) {
    throw Error(ErrorCode::invalid_state, "cannot normalize a zero cavity vector");
  }
  amplitudes /= n;
  return CavityState(std::move(amplitudes), leakage);
}

Complex CavityState::inner(const CavityState& other) const {
  if (other.fock_cutoff() != fock_cutoff()) {
    throw Error(ErrorCode::dimension_mismatch, "cavity states have different cutoffs");
  }
  return amplitudes_.dot(other.amplitudes_);
}

PureState::PureState(SystemDims dims, Eigen::VectorXcd amplitudes, double norm_tolerance)
    : dims_(dims), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dims_.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "state vector length does not match dims");
  }
  require_norm(amplitudes_.squaredNorm(), norm_tolerance);
}

PureState PureState::normalized(SystemDims dims, Eigen::VectorXcd amplitudes) {
  const double n = amplitudes.norm();
  if (!(n > 0.0)) {
    throw Error(ErrorCode::invalid_state, "cannot normalize a zero state vector");
  }
  amplitudes /= n;
  return PureState(dims, std::move(amplitudes));
}

PureState PureState::product(const QuquartVector& ququart, const CavityState& cavity) {
  const SystemDims dims(cavity.fock_cutoff());
  const int n_fock = dims.fock_cutoff();
  Eigen::VectorXcd v(dims.total_dim());
  for (int level = 0; level < kQuquartDim; ++level) {
    v.segment(level * n_fock, n_fock) = ququart(level) * cavity.amplitudes();
  }
  return PureState(dims, std::move(v));
}

PureState PureState::basis(SystemDims dims, Level level, int n) {
  if (n < 0 || n >= dims.fock_cutoff()) {
    throw Error(ErrorCode::invalid_argument, "Fock index out of range");
  }
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dims.total_dim());
  v(dims.index(level, n)) = 1.0;
  return PureState(dims, std::move(v));
}

Complex PureState::inner(const PureState& other) const {
  require_same_dims(dims_, other.dims_);
  return amplitudes_.dot(other.amplitudes_);
}

std::array<double, kQuquartDim> PureState::level_populations() const {
  std::array<double, kQuquartDim> pops{};
  const int n = dims_.fock_cutoff();
  for (int level = 0; level < kQuquartDim; ++level) {
    pops[level] = amplitudes_.segment(level * n, n).squaredNorm();
  }
  return pops;
}

Eigen::Matrix4cd PureState::ququart_reduced() const {
  const int n = dims_.fock_cutoff();
  Eigen::Matrix4cd r;
  for (int i = 0; i < kQuquartDim; ++i) {
    for (int j = 0; j < kQuquartDim; ++j) {
      // rho_ij = sum_n psi_{i,n} conj(psi_{j,n})
      r(i, j) = amplitudes_.segment(j * n, n).dot(amplitudes_.segment(i * n, n));
    }
  }
  return r;
}

Eigen::VectorXcd PureState::level_block(Level level) const {
  const int n = dims_.fock_cutoff();
  return amplitudes_.segment(level_index(level) * n, n);
}

DensityMatrix::DensityMatrix(SystemDims dims, Eigen::MatrixXcd data, DensityTolerance tol)
    : dims_(dims), data_(std::move(data)) {
  if (data_.rows() != dims_.total_dim() || data_.cols() != dims_.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "density matrix shape does not match dims");
  }
  const double tr = trace();
  if (!std::isfinite(tr) || std::abs(tr - 1.0) > tol.trace) {
    std::ostringstream os;
    os << "density matrix trace deviates from 1: tr = " << tr;
    throw Error(ErrorCode::invalid_state, os.str());
  }
  const double herm = hermiticity_error();
  if (herm > tol.hermiticity) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max|rho - rho^H| = " << herm;
    throw Error(ErrorCode::invalid_state, os.str());
  }
  const double lmin = min_eigenvalue();
  if (lmin < tol.min_eigenvalue) {
    std::ostringstream os;
    os << "density matrix has negative eigenvalue " << lmin;
    throw Error(ErrorCode::invalid_state, os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const auto& v = psi.amplitudes();
  return DensityMatrix(psi.dims(), v * v.adjoint());
}

double DensityMatrix::min_eigenvalue() const {
  const Eigen::MatrixXcd herm = 0.5 * (data_ + data_.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::hermiticity_error() const {
  return max_abs(data_ - data_.adjoint());
}

std::array<double, kQuquartDim> DensityMatrix::level_populations() const {
  std::array<double, kQuquartDim> pops{};
  const int n = dims_.fock_cutoff();
  for (int level = 0; level < kQuquartDim; ++level) {
    pops[level] = data_.diagonal().segment(level * n, n).real().sum();
  }
  return pops;
}

Eigen::Matrix4cd DensityMatrix::ququart_reduced() const {
  const int n = dims_.fock_cutoff();
  Eigen::Matrix4cd r;
  for (int i = 0; i < kQuquartDim; ++i) {
    for (int j = 0; j < kQuquartDim; ++j) {
      r(i, j) = data_.block(i * n, j * n, n, n).trace();
    }
  }
  return r;
}

}  // namespace catcsum
