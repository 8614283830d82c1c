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

#include "catcsum/core/cat.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "catcsum/error.hpp"

namespace catcsum {

namespace {

struct RawCoherent {
  Eigen::VectorXcd amplitudes;  // e^{-|b|^2/2} b^n / sqrt(n!)
  double leakage;
};

RawCoherent raw_coherent(Complex beta, int fock_cutoff) {
  if (fock_cutoff < 1) {
    throw Error(ErrorCode::invalid_argument, "fock_cutoff must be positive");
  }
  Eigen::VectorXcd c(fock_cutoff);
  c(0) = std::exp(-0.5 * std::norm(beta));
  for (int n = 1; n < fock_cutoff; ++n) {
    c(n) = c(n - 1) * beta / std::sqrt(static_cast<double>(n));
  }
  const double kept = c.squaredNorm();
  const double leakage = std::max(0.0, 1.0 - kept);
  if (leakage > kMaxTruncationLeakage) {
    std::ostringstream os;
    os << "fock cutoff " << fock_cutoff << " too small for |alpha| = " << std::abs(beta)
       << " (truncation leakage " << leakage << ")";
    throw Error(ErrorCode::cutoff_too_small, os.str());
  }
  return {std::move(c), leakage};
}

}  // namespace

CavityState coherent_state(Complex alpha, int fock_cutoff) {
  auto raw = raw_coherent(alpha, fock_cutoff);
  return CavityState::normalized(std::move(raw.amplitudes), raw.leakage);
}

CavityState cat_state(Complex alpha, double theta, int fock_cutoff) {
  if (alpha == Complex(0.0)) {
    throw Error(ErrorCode::invalid_argument, "cat state requires alpha != 0");
  }
  const Complex beta = alpha * std::polar(1.0, theta);
  auto raw = raw_coherent(beta, fock_cutoff);
  // |-beta> has amplitudes (-1)^n c_n, so odd Fock components cancel exactly.
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(fock_cutoff);
  for (int n = 0; n < fock_cutoff; n += 2) {
    v(n) = 2.0 * raw.amplitudes(n);
  }
  return CavityState::normalized(std::move(v), raw.leakage);
}

CavityState cat_codeword(int k, Complex alpha, int fock_cutoff) {
  if (k < 0 || k > 2) {
    throw Error(ErrorCode::invalid_argument,
                "cat codeword index must be 0, 1 or 2, got " + std::to_string(k));
  }
  return cat_state(alpha, k * std::numbers::pi / 3.0, fock_cutoff);
}

int recommended_cutoff(double abs_alpha, double tail) {
  const double mean = abs_alpha * abs_alpha;
  double p = std::exp(-mean);
  double cumulative = p;
  int n = 0;
  while (1.0 - cumulative >= tail) {
    ++n;
    p *= mean / n;
    cumulative += p;
    if (n > 100000) {
      throw Error(ErrorCode::invalid_argument, "recommended_cutoff did not converge");
    }
  }
  return std::max(2, n + 1);
}

CatCode::CatCode(Complex alpha, int fock_cutoff)
    : alpha_(alpha),
      codewords_{cat_codeword(0, alpha, fock_cutoff), cat_codeword(1, alpha, fock_cutoff),
                 cat_codeword(2, alpha, fock_cutoff)} {}

const CavityState& CatCode::codeword(int k) const {
  if (k < 0 || k > 2) {
    throw Error(ErrorCode::invalid_argument, "cat codeword index must be 0, 1 or 2");
  }
  return codewords_[k];
}

double CatCode::analytic_norm() const {
  return 1.0 / std::sqrt(2.0 * (1.0 + std::exp(-2.0 * std::norm(alpha_))));
}

Eigen::Matrix3cd CatCode::overlap_matrix() const {
  Eigen::Matrix3cd g;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      g(k, l) = codewords_[k].inner(codewords_[l]);
    }
  }
  return g;
}

double CatCode::max_offdiagonal_overlap_sq() const {
  const Eigen::Matrix3cd g = overlap_matrix();
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k != l) worst = std::max(worst, std::norm(g(k, l)));
    }
  }
  return worst;
}

}  // namespace catcsum
