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

#include "catcsum/core/fidelity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "catcsum/error.hpp"

namespace catcsum {

namespace {

constexpr double kNegativeInnerTolerance = 1e-8;

double checked_sqrt(double inner) {
  if (!std::isfinite(inner) || inner < -kNegativeInnerTolerance) {
    std::ostringstream os;
    os << "fidelity inner value is negative: " << inner;
    throw Error(ErrorCode::invalid_state, os.str());
  }
  return std::sqrt(std::clamp(inner, 0.0, 1.0));
}

Eigen::VectorXcd cavity_phases(int fock_cutoff, double theta) {
  Eigen::VectorXcd p(fock_cutoff);
  for (int n = 0; n < fock_cutoff; ++n) p(n) = std::polar(1.0, theta * n);
  return p;
}

}  // namespace

double fidelity(const PureState& psi, const DensityMatrix& rho) {
  require_same_dims(psi.dims(), rho.dims());
  const auto& v = psi.amplitudes();
  return checked_sqrt(v.dot(rho.data() * v).real());
}

double fidelity(const PureState& psi, const PureState& phi) {
  return checked_sqrt(std::norm(psi.inner(phi)));
}

CavityState rotate_cavity_phase(const CavityState& state, double theta) {
  Eigen::VectorXcd v =
      state.amplitudes().cwiseProduct(cavity_phases(state.fock_cutoff(), theta));
  return CavityState(std::move(v), state.leakage());
}

PureState rotate_cavity_phase(const PureState& state, double theta) {
  const int n = state.dims().fock_cutoff();
  const Eigen::VectorXcd p = cavity_phases(n, theta);
  Eigen::VectorXcd v = state.amplitudes();
  for (int level = 0; level < kQuquartDim; ++level) {
    v.segment(level * n, n).array() *= p.array();
  }
  return PureState(state.dims(), std::move(v));
}

DensityMatrix rotate_cavity_phase(const DensityMatrix& state, double theta) {
  const int n = state.dims().fock_cutoff();
  const Eigen::VectorXcd p = cavity_phases(n, theta);
  Eigen::VectorXcd full(state.dims().total_dim());
  for (int level = 0; level < kQuquartDim; ++level) full.segment(level * n, n) = p;
  Eigen::MatrixXcd m = full.asDiagonal() * state.data() * full.conjugate().asDiagonal();
  return DensityMatrix(state.dims(), std::move(m));
}

}  // namespace catcsum
