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

#include "qtm/pattern.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace qtm {

std::vector<PatternPoint> head_pattern(std::span<const TrajectoryRecord> trajectory) {
  std::vector<PatternPoint> out;
  out.reserve(trajectory.size());
  for (const auto& rec : trajectory) {
    const BlochVector b = bloch(reduce(rec.state, Subsystem::head));
    out.push_back({rec.step, b.sigma2, b.sigma3});
  }
  return out;
}

std::size_t count_distinct_points(std::span<const PatternPoint> points, double tolerance) {
  if (!(tolerance > 0.0)) throw std::invalid_argument("pattern tolerance must be positive");

  // Representatives are bucketed on a grid of cell size `tolerance`; every
  // representative within range of a point sits in the 3x3 block around it.
  auto key = [](std::int64_t i, std::int64_t j) {
    return (static_cast<std::uint64_t>(i) << 32) ^ static_cast<std::uint64_t>(j & 0xffffffff);
  };
  std::unordered_map<std::uint64_t, std::vector<PatternPoint>> grid;
  std::size_t clusters = 0;
  const double tol_sq = tolerance * tolerance;
  for (const auto& p : points) {
    const auto ci = static_cast<std::int64_t>(std::floor(p.sigma2 / tolerance));
    const auto cj = static_cast<std::int64_t>(std::floor(p.sigma3 / tolerance));
    bool found = false;
    for (std::int64_t di = -1; di <= 1 && !found; ++di) {
      for (std::int64_t dj = -1; dj <= 1 && !found; ++dj) {
        auto it = grid.find(key(ci + di, cj + dj));
        if (it == grid.end()) continue;
        for (const auto& r : it->second) {
          const double dx = r.sigma2 - p.sigma2;
          const double dy = r.sigma3 - p.sigma3;
          if (dx * dx + dy * dy <= tol_sq) {
            found = true;
            break;
          }
        }
      }
    }
    if (!found) {
      grid[key(ci, cj)].push_back(p);
      ++clusters;
    }
  }
  return clusters;
}

}  // namespace qtm
