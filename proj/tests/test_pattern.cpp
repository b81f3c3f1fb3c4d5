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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qtm;

namespace {

// Quadratic reference: the same greedy rule without the grid.
std::size_t brute_force_distinct(const std::vector<PatternPoint>& pts, double tol) {
  std::vector<PatternPoint> reps;
  for (const auto& p : pts) {
    bool found = false;
    for (const auto& r : reps) {
      if (std::hypot(r.sigma2 - p.sigma2, r.sigma3 - p.sigma3) <= tol) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(p);
  }
  return reps.size();
}

}  // namespace

TEST(CountDistinct, SmallCases) {
  std::vector<PatternPoint> pts{{0, 0.0, 0.0}, {1, 5e-7, 0.0}, {2, 2e-6, 0.0}, {3, 0.0, -1.0}};
  EXPECT_EQ(count_distinct_points(pts, 1e-6), 3u);
  EXPECT_EQ(count_distinct_points({}, 1e-6), 0u);
  EXPECT_THROW(count_distinct_points(pts, 0.0), std::invalid_argument);
}

TEST(CountDistinct, AgreesWithBruteForce) {
  std::mt19937_64 rng(67);
  for (double tol : {1e-6, 1e-3, 0.05}) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<PatternPoint> pts;
    // Clustered points near a handful of centres plus uniform noise.
    for (std::size_t i = 0; i < 3000; ++i) {
      const double cx = std::floor(u(rng) * 4) / 4, cy = std::floor(u(rng) * 4) / 4;
      pts.push_back({i, cx + tol * 0.3 * u(rng), cy + tol * 0.3 * u(rng)});
      pts.push_back({i, u(rng), u(rng)});
    }
    EXPECT_EQ(count_distinct_points(pts, tol), brute_force_distinct(pts, tol)) << tol;
  }
}

TEST(HeadPattern, CollapseForEqualAngles) {
  const double a = 0.4 * std::numbers::pi;
  const auto s = AngleSchedule::substitution(generate_letters(SubstitutionRule::fibonacci(), 5001), a, a);
  const auto pts = head_pattern(evolve(NetworkState::basis(-1, -1), s, 10000, 1));
  ASSERT_EQ(pts.size(), 10001u);
  EXPECT_LE(count_distinct_points(pts), 30u);
  EXPECT_EQ(count_distinct_points(pts), brute_force_distinct(pts, 1e-6));
}

TEST(HeadPattern, SpreadsForIncommensurateOffset) {
  const double a = 0.4 * std::numbers::pi;
  const auto s = AngleSchedule::substitution(generate_letters(SubstitutionRule::fibonacci(), 5001), a,
                                             a + 0.03 * std::numbers::pi * std::numbers::sqrt2);
  const auto pts = head_pattern(evolve(NetworkState::basis(-1, -1), s, 10000, 1));
  EXPECT_GT(count_distinct_points(pts), 1000u);
}
