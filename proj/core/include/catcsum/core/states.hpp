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

#pragma once

#include <array>

#include <Eigen/Dense>

#include "catcsum/core/dims.hpp"

namespace catcsum {

inline constexpr double kNormTolerance = 1e-8;

// Normalized state of the cavity factor alone (length fock_cutoff).
class CavityState {
 public:
  // `leakage` is the probability weight lost to truncation before
  // renormalization; zero when the state is exactly representable.
  CavityState(Eigen::VectorXcd amplitudes, double leakage = 0.0);

  static CavityState normalized(Eigen::VectorXcd amplitudes, double leakage = 0.0);

  int fock_cutoff() const { return static_cast<int>(amplitudes_.size()); }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  double leakage() const { return leakage_; }
  Complex inner(const CavityState& other) const;  // <this|other>

 private:
  Eigen::VectorXcd amplitudes_;
  double leakage_;
};

// Pure state on the ququart (x) cavity space.
class PureState {
 public:
  // Throws invalid_state when | ||psi||^2 - 1 | exceeds `norm_tolerance`.
  PureState(SystemDims dims, Eigen::VectorXcd amplitudes,
            double norm_tolerance = kNormTolerance);

  static PureState normalized(SystemDims dims, Eigen::VectorXcd amplitudes);
  static PureState product(const QuquartVector& ququart, const CavityState& cavity);
  static PureState basis(SystemDims dims, Level level, int n);

  const SystemDims& dims() const { return dims_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  double norm() const { return amplitudes_.norm(); }

  Complex inner(const PureState& other) const;  // <this|other>
  std::array<double, kQuquartDim> level_populations() const;
  Eigen::Matrix4cd ququart_reduced() const;
  // Cavity block belonging to one ququart level (unnormalized).
  Eigen::VectorXcd level_block(Level level) const;

 private:
  SystemDims dims_;
  Eigen::VectorXcd amplitudes_;
};

struct DensityTolerance {
  double trace = 1e-8;
  double hermiticity = 1e-10;
  double min_eigenvalue = -1e-8;
};

class DensityMatrix {
 public:
  // Validates trace, Hermiticity and positivity against `tol`.
  DensityMatrix(SystemDims dims, Eigen::MatrixXcd data, DensityTolerance tol = {});

  static DensityMatrix from_pure(const PureState& psi);

  const SystemDims& dims() const { return dims_; }
  const Eigen::MatrixXcd& data() const { return data_; }

  double trace() const { return data_.trace().real(); }
  double min_eigenvalue() const;
  double hermiticity_error() const;
  std::array<double, kQuquartDim> level_populations() const;
  Eigen::Matrix4cd ququart_reduced() const;

 private:
  SystemDims dims_;
  Eigen::MatrixXcd data_;
};

double max_abs(const Eigen::MatrixXcd& m);

}  // namespace catcsum
