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

#include <complex>
#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

namespace catcsum {

using Complex = std::complex<double>;

// Ququart levels by logical index. |b> is the auxiliary level; ordering is not
// by energy (|1> is the physical ground level of the flux device).
enum class Level : int { zero = 0, one = 1, two = 2, b = 3 };

constexpr int kQuquartDim = 4;

constexpr int level_index(Level level) { return static_cast<int>(level); }
Level level_from_index(int index);
std::string_view to_string(Level level);

// Composite Hilbert space ququart (x) cavity, truncated at `fock_cutoff` Fock
// states. Composite index = level * fock_cutoff + n, so each ququart level
// owns one contiguous cavity block.
class SystemDims {
 public:
  explicit SystemDims(int fock_cutoff);

  static constexpr int ququart_dim() { return kQuquartDim; }
  int fock_cutoff() const { return fock_cutoff_; }
  int total_dim() const { return kQuquartDim * fock_cutoff_; }

  int index(Level level, int n) const { return level_index(level) * fock_cutoff_ + n; }
  int index(int level, int n) const { return level * fock_cutoff_ + n; }

  friend bool operator==(const SystemDims&, const SystemDims&) = default;

 private:
  int fock_cutoff_;
};

void require_same_dims(const SystemDims& a, const SystemDims& b);

using QuquartVector = Eigen::Vector4cd;
using QuquartMatrix = Eigen::Matrix4cd;

}  // namespace catcsum
