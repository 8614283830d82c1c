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

#include "catcsum/experiments/config.hpp"

namespace catcsum::experiments {

struct ValidationCheck {
  std::string name;
  bool passed;
  double value;
  double threshold;
  std::string detail;
};

// Invariant suite at the configured device parameters and cutoff. Only
// closed-form and analytic-engine checks; no time stepping.
std::vector<ValidationCheck> validate_config(const ExperimentConfig& config);

bool all_passed(const std::vector<ValidationCheck>& checks);

}  // namespace catcsum::experiments
