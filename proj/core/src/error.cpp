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

#include "catcsum/error.hpp"

namespace catcsum {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument:
      return "invalid_argument";
    case ErrorCode::dimension_mismatch:
      return "dimension_mismatch";
    case ErrorCode::cutoff_too_small:
      return "cutoff_too_small";
    case ErrorCode::invalid_state:
      return "invalid_state";
    case ErrorCode::integration_failure:
      return "integration_failure";
    case ErrorCode::config_error:
      return "config_error";
    case ErrorCode::io_error:
      return "io_error";
  }
  return "unknown";
}

}  // namespace catcsum
