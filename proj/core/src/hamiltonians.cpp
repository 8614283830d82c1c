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

#include "catcsum/model/hamiltonians.hpp"

#include <string>
#include <vector>

namespace catcsum::model {

namespace {

using dynamics::Term;
using dynamics::TermKind;

SparseMatrix coupling_matrix(Transition t, const SparseMatrix& cavity_op) {
  const auto s = coupling_structure(t);
  return kron(ququart_outer(s.raised, s.lowered), cavity_op);
}

void add_corotating(std::vector<Term>& terms, const DeviceParams& p, Transition t,
                    const SparseMatrix& a) {
  const double g = p.coupling(t);
  if (g == 0.0) return;
  terms.push_back({coupling_matrix(t, a), p.detuning(t), g, TermKind::paired,
                   std::string(to_string(t))});
}

void add_counter_rotating(std::vector<Term>& terms, const DeviceParams& p, Transition t,
                          const SparseMatrix& a_dag) {
  const double g = p.coupling(t);
  if (g == 0.0) return;
  terms.push_back({coupling_matrix(t, a_dag), p.omega_c + p.transition_frequency(t), g,
                   TermKind::paired, std::string(to_string(t)) + "_cr"});
}

}  // namespace

dynamics::TimeDependentOperator hamiltonian_rwa(const DeviceParams& params, SystemDims dims) {
  const SparseMatrix a = cavity_annihilation(dims.fock_cutoff());
  std::vector<Term> terms;
  add_corotating(terms, params, Transition::t1b, a);
  add_corotating(terms, params, Transition::t2b, a);
  return dynamics::TimeDependentOperator(dims, std::move(terms));
}

dynamics::TimeDependentOperator hamiltonian_full(const DeviceParams& params, SystemDims dims,
                                                 FullTermSelection selection) {
  const SparseMatrix a = cavity_annihilation(dims.fock_cutoff());
  const SparseMatrix a_dag = a.adjoint();
  std::vector<Term> terms;
  for (Transition t : kAllTransitions) {
    const bool gate_transition = t == Transition::t1b || t == Transition::t2b;
    if (!gate_transition && !selection.unwanted_couplings) continue;
    add_corotating(terms, params, t, a);
    if (selection.counter_rotating) add_counter_rotating(terms, params, t, a_dag);
  }
  return dynamics::TimeDependentOperator(dims, std::move(terms));
}

Operator hamiltonian_effective(const DispersiveShifts& shifts, SystemDims dims, bool include_b) {
  const int n_fock = dims.fock_cutoff();
  SparseMatrix h(dims.total_dim(), dims.total_dim());
  std::vector<Eigen::Triplet<Complex>> t;
  for (int n = 0; n < n_fock; ++n) {
    t.emplace_back(dims.index(Level::one, n), dims.index(Level::one, n), -shifts.lambda1 * n);
    t.emplace_back(dims.index(Level::two, n), dims.index(Level::two, n), -shifts.lambda2 * n);
    if (include_b) {
      // a a^+ = n + 1 below the truncation edge; the top Fock level sees the
      // truncated matrix product a a^+ (= 0 there).
      const double aad = (n + 1 < n_fock) ? n + 1.0 : 0.0;
      t.emplace_back(dims.index(Level::b, n), dims.index(Level::b, n),
                     (shifts.lambda1 + shifts.lambda2) * aad);
    }
  }
  h.setFromTriplets(t.begin(), t.end());
  return Operator(dims, std::move(h), true);
}

}  // namespace catcsum::model
