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

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "catcsum/core/dims.hpp"
#include "catcsum/core/states.hpp"

namespace catcsum {

using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

inline constexpr double kHermitianTolerance = 1e-12;

// Sparse operator on the composite space.
class Operator {
 public:
  // When `hermitian` is set, the matrix must satisfy max|A - A^H| <= 1e-12.
  Operator(SystemDims dims, SparseMatrix data, bool hermitian = false);

  const SystemDims& dims() const { return dims_; }
  const SparseMatrix& data() const { return data_; }
  bool is_hermitian() const { return hermitian_; }

  Operator adjoint() const;
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(data_); }

  Operator operator*(const Operator& rhs) const;
  Operator operator+(const Operator& rhs) const;
  Operator operator-(const Operator& rhs) const;
  Operator scaled(Complex factor) const;

  Eigen::VectorXcd apply(const PureState& psi) const;
  Complex expectation(const PureState& psi) const;
  Complex expectation(const DensityMatrix& rho) const;

 private:
  SystemDims dims_;
  SparseMatrix data_;
  bool hermitian_;
};

double hermiticity_error(const SparseMatrix& m);

// Cavity-factor matrices (fock_cutoff x fock_cutoff).
SparseMatrix cavity_annihilation(int fock_cutoff);
SparseMatrix cavity_identity(int fock_cutoff);

// A (x) B with A on the ququart and B on the cavity.
SparseMatrix kron(const QuquartMatrix& ququart, const SparseMatrix& cavity);

// Operators lifted to the composite space.
Operator annihilation(SystemDims dims);
Operator creation(SystemDims dims);
Operator number_op(SystemDims dims);
// |to><from| (x) 1
Operator ququart_transition(Level to, Level from, SystemDims dims);
Operator ququart_transition(int to, int from, SystemDims dims);
// |j><j| (x) 1
Operator ququart_projector(Level level, SystemDims dims);
Operator ququart_projector(int level, SystemDims dims);
Operator lift_ququart(const QuquartMatrix& m, SystemDims dims);
Operator lift_cavity(const SparseMatrix& m, SystemDims dims);

QuquartMatrix ququart_outer(Level to, Level from);

}  // namespace catcsum
