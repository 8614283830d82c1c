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

#include "catcsum/dynamics/time_dependent_operator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "catcsum/error.hpp"

namespace catcsum::dynamics {

namespace {

std::vector<PhaseFactorizedMatrix::Component> expand_terms(const std::vector<Term>& terms,
                                                           int dim) {
  std::vector<PhaseFactorizedMatrix::Component> out;
  out.reserve(2 * terms.size());
  for (const auto& term : terms) {
    if (term.matrix.rows() != dim || term.matrix.cols() != dim) {
      throw Error(ErrorCode::dimension_mismatch, "term '" + term.label + "' has wrong shape");
    }
    switch (term.kind) {
      case TermKind::paired:
        out.push_back({term.matrix, term.frequency, term.amplitude});
        out.push_back({SparseMatrix(term.matrix.adjoint()), -term.frequency,
                       std::conj(term.amplitude)});
        break;
      case TermKind::hermitian:
        if (term.frequency != 0.0 || term.amplitude.imag() != 0.0) {
          throw Error(ErrorCode::invalid_argument,
                      "hermitian term '" + term.label +
                          "' needs zero frequency and a real amplitude");
        }
        if (hermiticity_error(term.matrix) > kHermitianTolerance) {
          throw Error(ErrorCode::invalid_argument,
                      "hermitian term '" + term.label + "' is not Hermitian");
        }
        out.push_back({term.matrix, 0.0, term.amplitude});
        break;
    }
  }
  return out;
}

}  // namespace

PhaseFactorizedMatrix::PhaseFactorizedMatrix(int dim, std::vector<Component> components)
    : dim_(dim), components_(std::move(components)), pattern_(dim, dim) {
  std::vector<Eigen::Triplet<Complex>> triplets;
  for (auto& c : components_) {
    if (c.matrix.rows() != dim || c.matrix.cols() != dim) {
      throw Error(ErrorCode::dimension_mismatch, "phase component has wrong shape");
    }
    c.matrix.makeCompressed();
    for (int r = 0; r < c.matrix.outerSize(); ++r) {
      for (SparseMatrix::InnerIterator it(c.matrix, r); it; ++it) {
        triplets.emplace_back(it.row(), it.col(), Complex(1.0));
      }
    }
  }
  pattern_.setFromTriplets(triplets.begin(), triplets.end());
  pattern_.makeCompressed();

  const int* outer = pattern_.outerIndexPtr();
  const int* inner = pattern_.innerIndexPtr();
  for (int k = 0; k < static_cast<int>(components_.size()); ++k) {
    const auto& m = components_[k].matrix;
    for (int r = 0; r < m.outerSize(); ++r) {
      for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
        const int* begin = inner + outer[r];
        const int* end = inner + outer[r + 1];
        const int* pos = std::lower_bound(begin, end, static_cast<int>(it.col()));
        contributions_.push_back({k, static_cast<int>(pos - inner), it.value()});
      }
    }
  }
  // Group by position for a cache-friendly accumulation pass.
  std::stable_sort(contributions_.begin(), contributions_.end(),
                   [](const Contribution& a, const Contribution& b) {
                     return a.position < b.position;
                   });
  std::fill(pattern_.valuePtr(), pattern_.valuePtr() + pattern_.nonZeros(), Complex(0.0));
}

void PhaseFactorizedMatrix::evaluate_into(double t, SparseMatrix& out) const {
  if (out.nonZeros() != pattern_.nonZeros() || out.rows() != dim_) {
    out = pattern_;
  }
  std::vector<Complex> coeff(components_.size());
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const auto& c = components_[k];
    coeff[k] = c.frequency == 0.0 ? c.amplitude : c.amplitude * std::polar(1.0, c.frequency * t);
  }
  Complex* values = out.valuePtr();
  std::fill(values, values + out.nonZeros(), Complex(0.0));
  for (const auto& contrib : contributions_) {
    values[contrib.position] += coeff[contrib.component] * contrib.value;
  }
}

SparseMatrix PhaseFactorizedMatrix::evaluate(double t) const {
  SparseMatrix out = pattern_;
  evaluate_into(t, out);
  return out;
}

TimeDependentOperator::TimeDependentOperator(SystemDims dims, std::vector<Term> terms)
    : dims_(dims),
      terms_(std::move(terms)),
      expanded_(dims.total_dim(), expand_terms(terms_, dims.total_dim())) {
  for (const auto& term : terms_) {
    if (term.amplitude != Complex(0.0)) {
      max_frequency_ = std::max(max_frequency_, std::abs(term.frequency));
    }
  }
}

TimeDependentOperator TimeDependentOperator::zero(SystemDims dims) {
  return TimeDependentOperator(dims, {});
}

TimeDependentOperator TimeDependentOperator::constant(const Operator& hermitian,
                                                      std::string label) {
  Term term{hermitian.data(), 0.0, 1.0, TermKind::hermitian, std::move(label)};
  return TimeDependentOperator(hermitian.dims(), {std::move(term)});
}

Operator TimeDependentOperator::evaluate(double t) const {
  return Operator(dims_, expanded_.evaluate(t));
}

}  // namespace catcsum::dynamics
