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

#include "catcsum/core/states.hpp"

namespace catcsum {

// Truncation leakage above which a coherent or cat state is rejected.
inline constexpr double kMaxTruncationLeakage = 1e-6;

// |alpha> truncated to Fock states 0..N-1 and renormalized. The discarded
// Poisson weight is kept in CavityState::leakage(). Throws cutoff_too_small
// when the leakage exceeds kMaxTruncationLeakage.
CavityState coherent_state(Complex alpha, int fock_cutoff);

// Normalized |beta> + |-beta> with beta = alpha * e^{i theta}.
CavityState cat_state(Complex alpha, double theta, int fock_cutoff);

// Cat-qutrit codeword k in {0, 1, 2}: cat_state at angle k*pi/3.
CavityState cat_codeword(int k, Complex alpha, int fock_cutoff);

// Smallest cutoff whose Poisson tail beyond N-1 is below `tail`.
int recommended_cutoff(double abs_alpha, double tail = 1e-8);

// The three quasi-orthogonal codewords at a given amplitude.
class CatCode {
 public:
  CatCode(Complex alpha, int fock_cutoff);

  Complex alpha() const { return alpha_; }
  const CavityState& codeword(int k) const;
  const std::array<CavityState, 3>& codewords() const { return codewords_; }

  // 1/sqrt(2(1 + e^{-2|alpha|^2})), shared by all three codewords.
  double analytic_norm() const;
  // Gram matrix G(k, l) = <k|l> of the truncated codewords.
  Eigen::Matrix3cd overlap_matrix() const;
  double max_offdiagonal_overlap_sq() const;

 private:
  Complex alpha_;
  std::array<CavityState, 3> codewords_;
};

}  // namespace catcsum
