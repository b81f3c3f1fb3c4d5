// Copyright 2026 The qtm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace qtm {

struct CheckResult {
  std::string name;
  bool passed = false;
  double observed = 0.0;  ///< worst value seen
  double limit = 0.0;     ///< value it was held against
};

struct VerifyOptions {
  std::size_t n_steps = 10000;
  double alpha1 = 0.4 * std::numbers::pi;
  double qf_offset = 0.03 * std::numbers::pi;
  double tm_offset = 0.1001 * std::numbers::pi;
};

/// Oracle-equivalence and invariant checks of the simulator against the
/// closed-form branch trajectories.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace qtm
