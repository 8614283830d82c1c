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

#include <string>
#include <vector>

#include "catcsum/core/operators.hpp"

namespace catcsum::dynamics {

// Sum of constant sparse matrices with scalar phase factors,
//   M(t) = sum_k amplitude_k * e^{i frequency_k t} * matrix_k,
// assembled into one fixed sparsity pattern so that evaluating at a new time
// costs one complex exponential per component plus one pass over the nonzeros.
class PhaseFactorizedMatrix {
 public:
  struct Component {
    SparseMatrix matrix;
    double frequency = 0.0;  // rad/us
    Complex amplitude = 1.0;
  };

  PhaseFactorizedMatrix(int dim, std::vector<Component> components);

  int dim() const { return dim_; }
  const std::vector<Component>& components() const { return components_; }
  // Matrix with the merged sparsity pattern; evaluate_into() only rewrites
  // its values, so the result of pattern() is the intended output buffer.
  const SparseMatrix& pattern() const { return pattern_; }

  void evaluate_into(double t, SparseMatrix& out) const;
  SparseMatrix evaluate(double t) const;

 private:
  struct Contribution {
    int component;
    int position;  // offset into the merged value array
    Complex value;
  };

  int dim_;
  std::vector<Component> components_;
  SparseMatrix pattern_;
  std::vector<Contribution> contributions_;
};

enum class TermKind {
  // amplitude * e^{i f t} * matrix + h.c.
  paired,
  // amplitude * matrix with a Hermitian matrix, real amplitude and f = 0
  hermitian,
};

struct Term {
  SparseMatrix matrix;
  double frequency = 0.0;  // rad/us
  Complex amplitude = 1.0;
  TermKind kind = TermKind::paired;
  std::string label;
};

// Hermitian time-dependent Hamiltonian H(t) built from phase-tagged terms.
// Hermiticity holds for every t by construction.
class TimeDependentOperator {
 public:
  TimeDependentOperator(SystemDims dims, std::vector<Term> terms);

  static TimeDependentOperator zero(SystemDims dims);
  // Wraps a time-independent Hermitian operator.
  static TimeDependentOperator constant(const Operator& hermitian, std::string label = "static");

  const SystemDims& dims() const { return dims_; }
  const std::vector<Term>& terms() const { return terms_; }
  // Largest |frequency| over terms with nonzero amplitude; 0 when static.
  double max_frequency() const { return max_frequency_; }

  Operator evaluate(double t) const;
  void evaluate_into(double t, SparseMatrix& out) const { expanded_.evaluate_into(t, out); }
  const SparseMatrix& pattern() const { return expanded_.pattern(); }

  // Phase components including the explicit conjugate partners; used to
  // build derived generators such as the non-Hermitian Lindblad kernel.
  const std::vector<PhaseFactorizedMatrix::Component>& components() const {
    return expanded_.components();
  }

 private:
  SystemDims dims_;
  std::vector<Term> terms_;
  double max_frequency_ = 0.0;
  PhaseFactorizedMatrix expanded_;
};

}  // namespace catcsum::dynamics
