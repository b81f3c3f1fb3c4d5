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

#include "qtm/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace qtm {

namespace {

constexpr double kWeightTolerance = 1e-12;

void check_weights(BranchWeights w) {
  if (w.plus < 0.0 || w.minus < 0.0 || std::abs(w.plus + w.minus - 1.0) > kWeightTolerance) {
    throw std::invalid_argument(
        fmt::format("branch weights must be nonnegative and sum to 1, got ({}, {})", w.plus,
                    w.minus));
  }
}

// C(+) grows linearly and reaches thousands of radians by n = 10^4; a plain
// running sum drifts by ~1e-10 there, so carry a Neumaier correction.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double t = sum + x;
    carry += (std::abs(sum) >= std::abs(x)) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  [[nodiscard]] double value() const { return sum + carry; }
};

// Steps the two branch angles from n-1 to n.
void advance(const AngleSchedule& schedule, std::size_t n, CompensatedSum& c_plus, double& c_minus) {
  if (n % 2 == 1) {
    const double alpha = schedule.angle((n + 1) / 2);
    c_plus.add(alpha);
    c_minus += alpha;
  } else {
    c_minus = -c_minus;
  }
}

}  // namespace

BranchWeights BranchWeights::of(const NetworkState& state) {
  const double h = 1.0 / std::sqrt(2.0);
  double plus = 0.0;
  double minus = 0.0;
  for (int head : {-1, 1}) {
    const cplx lo = state.amplitude(head, -1);
    const cplx hi = state.amplitude(head, 1);
    plus += std::norm(h * (lo + hi));
    minus += std::norm(h * (lo - hi));
  }
  const double total = plus + minus;
  return {plus / total, minus / total};
}

double minus_bound(const AngleSchedule& schedule) {
  return 2.0 * std::max(std::abs(schedule.alpha1()), std::abs(schedule.alpha2()));
}

double cumulative_plus(const AngleSchedule& schedule, std::size_t n) {
  const std::size_t m = (n + 1) / 2;
  CompensatedSum sum;
  for (std::size_t j = 1; j <= m; ++j) sum.add(schedule.angle(j));
  return sum.value();
}

double cumulative_plus_closed(const AngleSchedule& schedule, std::size_t n) {
  const LetterSequence* letters = schedule.letters();
  if (letters == nullptr) {
    throw std::invalid_argument("closed-form C_n(+) needs a substitution schedule");
  }
  const std::size_t m = (n + 1) / 2;
  if (m > letters->length()) {
    throw CapacityError(fmt::format("step {} needs {} letters, schedule has {}", n, m,
                                    letters->length()));
  }
  const auto m_b = static_cast<double>(letters->count('b', m));
  return schedule.alpha1() * static_cast<double>(m) + (schedule.alpha2() - schedule.alpha1()) * m_b;
}

double cumulative_minus(const AngleSchedule& schedule, std::size_t n) {
  CompensatedSum c_plus;
  double c_minus = 0.0;
  for (std::size_t k = 1; k <= n; ++k) advance(schedule, k, c_plus, c_minus);
  return c_minus;
}

AnalyticTrajectory analytic_trajectory(const AngleSchedule& schedule, std::size_t n_max,
                                       BranchWeights weights) {
  check_weights(weights);
  AnalyticTrajectory t{schedule, {}, {}, {}, {}, minus_bound(schedule), weights};
  t.c_plus.reserve(n_max + 1);
  t.c_minus.reserve(n_max + 1);
  t.a_n.reserve(n_max + 1);
  t.b_n.reserve(n_max + 1);
  CompensatedSum c_plus;
  double c_minus = 0.0;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) advance(schedule, n, c_plus, c_minus);
    const double cp = c_plus.value();
    t.c_plus.push_back(cp);
    t.c_minus.push_back(c_minus);
    t.a_n.push_back(0.5 * (cp + c_minus));
    t.b_n.push_back(0.5 * (cp - c_minus));
  }
  return t;
}

PlaneBloch mixture_bloch(double c_plus, double c_minus, BranchWeights w) {
  check_weights(w);
  return {w.plus * std::sin(c_plus) + w.minus * std::sin(c_minus),
          -(w.plus * std::cos(c_plus) + w.minus * std::cos(c_minus))};
}

PlaneBloch closed_form_bloch(double c_plus, double c_minus, BranchWeights w) {
  check_weights(w);
  if (w.plus != w.minus) return mixture_bloch(c_plus, c_minus, w);
  const double a = 0.5 * (c_plus + c_minus);
  const double b = 0.5 * (c_plus - c_minus);
  const double cb = std::cos(b);
  return {cb * std::sin(a), -cb * std::cos(a)};
}

PlaneBloch closed_form_bloch(const AngleSchedule& schedule, std::size_t n, BranchWeights w) {
  CompensatedSum c_plus;
  double c_minus = 0.0;
  for (std::size_t k = 1; k <= n; ++k) advance(schedule, k, c_plus, c_minus);
  return closed_form_bloch(c_plus.value(), c_minus, w);
}

BoundCheck verify_minus_bound(const AngleSchedule& schedule, std::size_t n_max) {
  BoundCheck check;
  check.bound = minus_bound(schedule);
  CompensatedSum c_plus;
  double c_minus = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    advance(schedule, n, c_plus, c_minus);
    const double a = std::abs(c_minus);
    check.max_abs = std::max(check.max_abs, a);
    if (a > check.bound) ++check.violations;
  }
  check.holds = check.violations == 0;
  return check;
}

std::vector<ThueMorseCheckpoint> thue_morse_checkpoints(double alpha1, double alpha2,
                                                        std::size_t m_max) {
  if (m_max == 0) throw std::invalid_argument("m_max must be at least 1");
  const auto schedule = AngleSchedule::substitution(
      generate_letters(SubstitutionRule::thue_morse(), 4 * m_max), alpha1, alpha2);
  std::vector<ThueMorseCheckpoint> out;
  out.reserve(m_max);
  CompensatedSum c_plus;
  double c_minus = 0.0;
  for (std::size_t n = 1; n <= 8 * m_max; ++n) {
    advance(schedule, n, c_plus, c_minus);
    if (n % 8 == 0) out.push_back({n, c_plus.value(), c_minus});
  }
  return out;
}

}  // namespace qtm
