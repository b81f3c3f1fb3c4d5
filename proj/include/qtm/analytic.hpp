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

// Closed-form head trajectory for head |-1> with zero initial phase.
//
// Writing the tape as a |+>/|-> superposition, each branch keeps the head in a
// pure state on the sigma_1 = 0 circle at angle C_n(+-):
//
//   (sigma_2, sigma_3)(n | +-) = (sin C_n(+-), -cos C_n(+-)).
//
// In the |+> branch the QCNOT is the identity, so C_n(+) is the plain sum of
// the first ceil(n/2) angles. In the |-> branch the QCNOT acts as sigma_3 on
// the head and mirrors the angle:
//
//   C_{2m-1}(-) = alpha_m + C_{2m-2}(-),   C_{2m}(-) = -C_{2m-1}(-),   C_0(-) = 0,
//
// which keeps |C_n(-)| <= M = 2 max(|alpha1|, |alpha2|) for two-valued drives.
// The head Bloch vector is the weighted mix of the two branches; with equal
// weights it factors as cos B_n (sin A_n, -cos A_n), A_n and B_n being the
// half-sum and half-difference of C_n(+) and C_n(-).

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qtm/quantum_core.hpp"
#include "qtm/substitution.hpp"

namespace qtm {

/// Branch probabilities |a(+)|^2 and |a(-)|^2.
struct BranchWeights {
  double plus = 0.5;
  double minus = 0.5;

  /// Weights of the tape |+>/|-> components of a state.
  static BranchWeights of(const NetworkState& state);
};

struct AnalyticTrajectory {
  AngleSchedule schedule;
  std::vector<double> c_plus;   ///< index n = 0..n_max
  std::vector<double> c_minus;
  std::vector<double> a_n;
  std::vector<double> b_n;
  double bound_m = 0.0;
  BranchWeights weights;
};

/// 2 max(|alpha1|, |alpha2|)
double minus_bound(const AngleSchedule& schedule);

/// Sum of the first ceil(n/2) schedule angles.
double cumulative_plus(const AngleSchedule& schedule, std::size_t n);

/// alpha1 m + (alpha2 - alpha1) m', m' counting the b letters among the first
/// m = ceil(n/2). Substitution schedules only.
double cumulative_plus_closed(const AngleSchedule& schedule, std::size_t n);

/// Mirror recursion of the |-> branch evaluated at step n.
double cumulative_minus(const AngleSchedule& schedule, std::size_t n);

/// C_n(+-), A_n, B_n for every n in 0..n_max in one pass.
AnalyticTrajectory analytic_trajectory(const AngleSchedule& schedule, std::size_t n_max,
                                       BranchWeights weights = {});

struct PlaneBloch {
  double sigma2 = 0.0;
  double sigma3 = 0.0;
};

/// Head (sigma_2, sigma_3) from the branch angles. Equal weights use the
/// cos B (sin A, -cos A) factorization, other weights the branch mixture.
PlaneBloch closed_form_bloch(double c_plus, double c_minus, BranchWeights weights);
PlaneBloch closed_form_bloch(const AngleSchedule& schedule, std::size_t n,
                             BranchWeights weights = {});

/// Branch mixture w+ (sin C+, -cos C+) + w- (sin C-, -cos C-).
PlaneBloch mixture_bloch(double c_plus, double c_minus, BranchWeights weights);

struct BoundCheck {
  bool holds = true;
  double max_abs = 0.0;
  double bound = 0.0;
  std::size_t violations = 0;
};

/// Scans |C_n(-)| <= M over n = 0..n_max and reports what it finds.
BoundCheck verify_minus_bound(const AngleSchedule& schedule, std::size_t n_max);

struct ThueMorseCheckpoint {
  std::size_t n = 0;
  double c_plus = 0.0;
  double c_minus = 0.0;
};

/// (8m, 2 (alpha1 + alpha2) m, 0) for m = 1..m_max.
std::vector<ThueMorseCheckpoint> thue_morse_checkpoints(double alpha1, double alpha2,
                                                        std::size_t m_max);

}  // namespace qtm
