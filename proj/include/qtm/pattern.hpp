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
#include <span>
#include <vector>

#include "qtm/quantum_core.hpp"

namespace qtm {

inline constexpr double kDefaultPatternTolerance = 1e-6;

/// Head point in the reduced (sigma_2, sigma_3) Bloch plane.
struct PatternPoint {
  std::size_t n = 0;
  double sigma2 = 0.0;
  double sigma3 = 0.0;
};

std::vector<PatternPoint> head_pattern(std::span<const TrajectoryRecord> trajectory);

/// Greedy clustering in visiting order: a point founds a new cluster unless
/// some existing representative lies within `tolerance` (Euclidean).
std::size_t count_distinct_points(std::span<const PatternPoint> points,
                                  double tolerance = kDefaultPatternTolerance);

}  // namespace qtm
