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

#include "catcsum/dynamics/banded_operator.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "catcsum/error.hpp"

namespace catcsum::dynamics {

namespace {

using Key = std::tuple<int, int, int>;

// Rows n of a band with 0 <= n, n + offset < N.
struct Range {
  int first;
  int length;
};

Range valid_rows(int offset, int n_fock) {
  const int first = std::max(0, -offset);
  const int last = std::min(n_fock, n_fock - offset);
  return {first, std::max(0, last - first)};
}

std::map<Key, Eigen::VectorXcd> split_bands(SystemDims dims, const SparseMatrix& m) {
  if (m.rows() != dims.total_dim() || m.cols() != dims.total_dim()) {
    throw Error(ErrorCode::dimension_mismatch, "banded operator: matrix size differs from dims");
  }
  const int n_fock = dims.fock_cutoff();
  std::map<Key, Eigen::VectorXcd> bands;
  for (int r = 0; r < m.outerSize(); ++r) {
    for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
      const int row = static_cast<int>(it.row());
      const int col = static_cast<int>(it.col());
      const int n = row % n_fock;
      const Key key{row / n_fock, col / n_fock, col % n_fock - n};
      auto [pos, inserted] = bands.try_emplace(key);
      if (inserted) pos->second = Eigen::VectorXcd::Zero(n_fock);
      pos->second(n) += it.value();
    }
  }
  return bands;
}

}  // namespace

BandedOperator::BandedOperator(SystemDims dims, std::vector<Band> bands)
    : dims_(dims), bands_(std::move(bands)) {
  const int n_fock = dims_.fock_cutoff();
  for (const auto& b : bands_) {
    if (b.row_block < 0 || b.row_block >= kQuquartDim || b.col_block < 0 ||
        b.col_block >= kQuquartDim || b.offset <= -n_fock || b.offset >= n_fock ||
        b.values.size() != n_fock) {
      throw Error(ErrorCode::dimension_mismatch, "band outside the ququart (x) cavity layout");
    }
  }
}

BandedOperator BandedOperator::from_sparse(SystemDims dims, const SparseMatrix& m) {
  std::vector<Band> bands;
  for (auto& [key, values] : split_bands(dims, m)) {
    bands.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), std::move(values)});
  }
  return BandedOperator(dims, std::move(bands));
}

SparseMatrix BandedOperator::to_sparse() const {
  const int n_fock = dims_.fock_cutoff();
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (const auto& b : bands_) {
    const Range r = valid_rows(b.offset, n_fock);
    for (int n = r.first; n < r.first + r.length; ++n) {
      if (b.values(n) != Complex(0.0)) {
        triplets.emplace_back(b.row_block * n_fock + n, b.col_block * n_fock + n + b.offset,
                              b.values(n));
      }
    }
  }
  SparseMatrix m(dims_.total_dim(), dims_.total_dim());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

void BandedOperator::multiply_add(const RowMatrix& rho, RowMatrix& out) const {
  const int n_fock = dims_.fock_cutoff();
  for (const auto& b : bands_) {
    const Range r = valid_rows(b.offset, n_fock);
    const int out_row = b.row_block * n_fock;
    const int in_row = b.col_block * n_fock + b.offset;
    for (int n = r.first; n < r.first + r.length; ++n) {
      out.row(out_row + n) += b.values(n) * rho.row(in_row + n);
    }
  }
}

void BandedOperator::sandwich_add(const RowMatrix& rho, RowMatrix& out) const {
  const int n_fock = dims_.fock_cutoff();
  Eigen::RowVectorXcd right(n_fock);
  for (const auto& b2 : bands_) {
    const Range r2 = valid_rows(b2.offset, n_fock);
    if (r2.length == 0) continue;
    right.head(r2.length) = b2.values.segment(r2.first, r2.length).adjoint();
    const int out_col = b2.row_block * n_fock + r2.first;
    const int in_col = b2.col_block * n_fock + r2.first + b2.offset;
    for (const auto& b1 : bands_) {
      const Range r1 = valid_rows(b1.offset, n_fock);
      const int out_row = b1.row_block * n_fock;
      const int in_row = b1.col_block * n_fock + b1.offset;
      for (int n = r1.first; n < r1.first + r1.length; ++n) {
        out.row(out_row + n).segment(out_col, r2.length) +=
            b1.values(n) *
            rho.row(in_row + n).segment(in_col, r2.length).cwiseProduct(right.head(r2.length));
      }
    }
  }
}

PhasedBandedOperator::PhasedBandedOperator(
    SystemDims dims, const std::vector<PhaseFactorizedMatrix::Component>& components)
    : layout_(dims, {}) {
  std::map<Key, int> slots;
  for (const auto& c : components) {
    for (auto& [key, values] : split_bands(dims, c.matrix)) {
      auto [pos, inserted] = slots.try_emplace(key, static_cast<int>(slots.size()));
      if (inserted) {
        layout_.bands().push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key),
                                   Eigen::VectorXcd::Zero(dims.fock_cutoff())});
      }
      contributions_.push_back({c.frequency, c.amplitude, pos->second, std::move(values)});
    }
  }
}

void PhasedBandedOperator::evaluate_into(double t, BandedOperator& out) const {
  for (auto& b : out.bands()) b.values.setZero();
  for (const auto& c : contributions_) {
    const Complex coeff = c.amplitude * std::polar(1.0, c.frequency * t);
    out.bands()[c.slot].values += coeff * c.values;
  }
}

}  // namespace catcsum::dynamics
