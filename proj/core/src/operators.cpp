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

#include "catcsum/core/operators.hpp"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "catcsum/error.hpp"

namespace catcsum {

double hermiticity_error(const SparseMatrix& m) {
  const SparseMatrix diff = m - SparseMatrix(m.adjoint());
  double worst = 0.0;
  for (int k = 0; k < diff.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(diff, k); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

Operator::Operator(SystemDims dims, SparseMatrix data, bool hermitian)
    : dims_(dims), data_(std::move(data)), hermitian_(hermitian) {
  if (data_.rows() != dims_.total_dim() || data_.cols() != dims_.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "operator shape does not match dims");
  }
  data_.makeCompressed();
  if (hermitian_) {
    const double err = hermiticity_error(data_);
    if (err > kHermitianTolerance) {
      std::ostringstream os;
      os << "operator flagged Hermitian has max|A - A^H| = " << err;
      throw Error(ErrorCode::invalid_argument, os.str());
    }
  }
}

Operator Operator::adjoint() const {
  return Operator(dims_, SparseMatrix(data_.adjoint()), hermitian_);
}

Operator Operator::operator*(const Operator& rhs) const {
  require_same_dims(dims_, rhs.dims_);
  return Operator(dims_, SparseMatrix(data_ * rhs.data_));
}

Operator Operator::operator+(const Operator& rhs) const {
  require_same_dims(dims_, rhs.dims_);
  return Operator(dims_, SparseMatrix(data_ + rhs.data_), hermitian_ && rhs.hermitian_);
}

Operator Operator::operator-(const Operator& rhs) const {
  require_same_dims(dims_, rhs.dims_);
  return Operator(dims_, SparseMatrix(data_ - rhs.data_), hermitian_ && rhs.hermitian_);
}

Operator Operator::scaled(Complex factor) const {
  const bool stays_hermitian = hermitian_ && factor.imag() == 0.0;
  return Operator(dims_, SparseMatrix(factor * data_), stays_hermitian);
}

Eigen::VectorXcd Operator::apply(const PureState& psi) const {
  require_same_dims(dims_, psi.dims());
  return data_ * psi.amplitudes();
}

Complex Operator::expectation(const PureState& psi) const {
  return psi.amplitudes().dot(apply(psi));
}

Complex Operator::expectation(const DensityMatrix& rho) const {
  require_same_dims(dims_, rho.dims());
  // tr(A rho) = sum_ij A_ij rho_ji
  Complex acc = 0.0;
  for (int r = 0; r < data_.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(data_, r); it; ++it) {
      acc += it.value() * rho.data()(it.col(), r);
    }
  }
  return acc;
}

SparseMatrix cavity_annihilation(int fock_cutoff) {
  std::vector<Eigen::Triplet<Complex>> t;
  t.reserve(fock_cutoff);
  for (int n = 1; n < fock_cutoff; ++n) {
    t.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  }
  SparseMatrix a(fock_cutoff, fock_cutoff);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

SparseMatrix cavity_identity(int fock_cutoff) {
  SparseMatrix id(fock_cutoff, fock_cutoff);
  id.setIdentity();
  return id;
}

SparseMatrix kron(const QuquartMatrix& ququart, const SparseMatrix& cavity) {
  const int n = static_cast<int>(cavity.rows());
  std::vector<Eigen::Triplet<Complex>> t;
  for (int i = 0; i < kQuquartDim; ++i) {
    for (int j = 0; j < kQuquartDim; ++j) {
      const Complex q = ququart(i, j);
      if (q == Complex(0.0)) continue;
      for (int r = 0; r < cavity.outerSize(); ++r) {
        for (SparseMatrix::InnerIterator it(cavity, r); it; ++it) {
          t.emplace_back(i * n + it.row(), j * n + it.col(), q * it.value());
        }
      }
    }
  }
  SparseMatrix out(kQuquartDim * n, kQuquartDim * n);
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

QuquartMatrix ququart_outer(Level to, Level from) {
  QuquartMatrix m = QuquartMatrix::Zero();
  m(level_index(to), level_index(from)) = 1.0;
  return m;
}

Operator annihilation(SystemDims dims) {
  return lift_cavity(cavity_annihilation(dims.fock_cutoff()), dims);
}

Operator creation(SystemDims dims) { return annihilation(dims).adjoint(); }

Operator number_op(SystemDims dims) {
  const SparseMatrix a = cavity_annihilation(dims.fock_cutoff());
  return Operator(dims, kron(QuquartMatrix::Identity(), SparseMatrix(a.adjoint() * a)), true);
}

Operator ququart_transition(Level to, Level from, SystemDims dims) {
  return lift_ququart(ququart_outer(to, from), dims);
}

Operator ququart_transition(int to, int from, SystemDims dims) {
  return ququart_transition(level_from_index(to), level_from_index(from), dims);
}

Operator ququart_projector(Level level, SystemDims dims) {
  return Operator(dims, kron(ququart_outer(level, level), cavity_identity(dims.fock_cutoff())),
                  true);
}

Operator ququart_projector(int level, SystemDims dims) {
  return ququart_projector(level_from_index(level), dims);
}

Operator lift_ququart(const QuquartMatrix& m, SystemDims dims) {
  return Operator(dims, kron(m, cavity_identity(dims.fock_cutoff())));
}

Operator lift_cavity(const SparseMatrix& m, SystemDims dims) {
  if (m.rows() != dims.fock_cutoff() || m.cols() != dims.fock_cutoff()) {
    throw Error(ErrorCode::dimension_mismatch, "cavity operator does not match fock cutoff");
  }
  return Operator(dims, kron(QuquartMatrix::Identity(), m));
}

}  // namespace catcsum
