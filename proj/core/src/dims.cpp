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

#include "catcsum/core/dims.hpp"

#include <string>

#include "catcsum/error.hpp"

namespace catcsum {

Level level_from_index(int index) {
  if (index < 0 || index >= kQuquartDim) {
    throw Error(ErrorCode::invalid_argument,
                "ququart level index out of range: " + std::to_string(index));
  }
  return static_cast<Level>(index);
}

std::string_view to_string(Level level) {
  switch (level) {
    case Level::zero:
      return "0";
    case Level::one:
      return "1";
    case Level::two:
      return "2";
    case Level::b:
      return "b";
  }
  return "?";
}

SystemDims::SystemDims(int fock_cutoff) : fock_cutoff_(fock_cutoff) {
  if (fock_cutoff < 2) {
    throw Error(ErrorCode::invalid_argument,
                "fock_cutoff must be >= 2, got " + std::to_string(fock_cutoff));
  }
}

void require_same_dims(const SystemDims& a, const SystemDims& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::dimension_mismatch,
                "dimension mismatch: fock_cutoff " + std::to_string(a.fock_cutoff()) +
                    " vs " + std::to_string(b.fock_cutoff()));
  }
}

}  // namespace catcsum
