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

#include <vector>

#include <Eigen/Dense>

#include "catcsum/core/operators.hpp"
#include "catcsum/dynamics/time_dependent_operator.hpp"

namespace catcsum::dynamics {

using RowMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// One diagonal of one ququart block: entries
//   A(row_block * N + n, col_block * N + n + offset) = values(n).
struct Band {
  int row_block;
  int col_block;
  int offset;
  Eigen::VectorXcd values;  // length N; entries with n + offset outside [0, N) are unused
};

// Operator stored as a list of bands. Every ququart (x) cavity operator in
// this model (|i><j| (x) {1, a, a^+, f(n)}) has a handful of bands, so
// products with a dense density matrix reduce to scaled row updates.
class BandedOperator {
 public:
  BandedOperator(SystemDims dims, std::vector<Band> bands);
  static BandedOperator from_sparse(SystemDims dims, const SparseMatrix& m);

  const SystemDims& dims() const { return dims_; }
  const std::vector<Band>& bands() const { return bands_; }
  std::vector<Band>& bands() { return bands_; }
  SparseMatrix to_sparse() const;

  // out += A rho
  void multiply_add(const RowMatrix& rho, RowMatrix& out) const;
  // out += A rho A^+
  void sandwich_add(const RowMatrix& rho, RowMatrix& out) const;

 private:
  SystemDims dims_;
  std::vector<Band> bands_;
};

// Phase-factorized sum of banded components, sum_k amp_k e^{i f_k t} M_k,
// merged into one band layout.
class PhasedBandedOperator {
 public:
  PhasedBandedOperator(SystemDims dims,
                       const std::vector<PhaseFactorizedMatrix::Component>& components);

  // Band layout with zero values; the intended buffer for evaluate_into().
  const BandedOperator& layout() const { return layout_; }
  void evaluate_into(double t, BandedOperator& out) const;

 private:
  struct Contribution {
    double frequency;
    Complex amplitude;
    int slot;
    Eigen::VectorXcd values;
  };

  BandedOperator layout_;
  std::vector<Contribution> contributions_;
};

}  // namespace catcsum::dynamics
