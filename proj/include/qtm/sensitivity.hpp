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

// Parameter sensitivity of the network dynamics.
//
// The distance between density operators is D^2 = Tr{(rho - rho')^2}, which
// lies in [0, 2] and reduces to 2 (1 - |<psi|psi'>|^2) for pure states. This is
// the squared Hilbert-Schmidt distance. Some chaos-diagnostics work calls it
// the Bures metric; it is not the Uhlmann-fidelity form.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qtm/quantum_core.hpp"
#include "qtm/substitution.hpp"

namespace qtm {

/// Dense Hermitian operator of dimension 2 or 4, row-major.
class DensityOperator {
 public:
  DensityOperator(std::size_t dim, std::vector<cplx> entries);

  static DensityOperator from(const DensityMatrix2& rho);
  /// |psi><psi|
  static DensityOperator pure(const NetworkState& psi);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] cplx operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

 private:
  std::size_t dim_;
  std::vector<cplx> entries_;
};

/// Tr{(rho - rho')^2}; throws std::invalid_argument on a dimension mismatch.
double distance_sq(const DensityOperator& rho, const DensityOperator& rho_prime);
double distance_sq(const DensityMatrix2& rho, const DensityMatrix2& rho_prime);

struct PerturbationSpec {
  enum class Kind { initial_state, parameters };

  Kind kind = Kind::initial_state;
  double delta = 0.0;   ///< initial_state: extra head rotation angle
  double delta1 = 0.0;  ///< parameters: offset to alpha1
  double delta2 = 0.0;  ///< parameters: offset to alpha2

  static PerturbationSpec initial_state(double delta);
  static PerturbationSpec parameters(double delta1, double delta2);

  void validate() const;

  bool operator==(const PerturbationSpec&) const = default;
};

struct RunConfig {
  NetworkState initial;
  AngleSchedule schedule;
  std::size_t n_steps = 0;
};

/// Inputs of the perturbed run.
///
/// An initial-state perturbation rotates the head by exp(-i sigma_1 delta / 2)
/// before the first step. Under the chaotic Fibonacci drive the initial head
/// phase is the zeroth member of the recursion, so the same delta also enters
/// both seeds and propagates as delta F_m into alpha_m.
RunConfig perturbed(const RunConfig& reference, const PerturbationSpec& perturbation);

struct SensitivityRecord {
  std::size_t n = 0;
  double d2_total = 0.0;
  double d2_head = 0.0;
  double d2_tape = 0.0;
  double overlap_sq = 1.0;
};

/// One record per step n = 0..n_steps. Reference and perturbed runs evolve
/// on separate threads and are merged by step index.
std::vector<SensitivityRecord> run_experiment(const RunConfig& reference,
                                              const PerturbationSpec& perturbation);

enum class GrowthClass { flat, bounded, exponential };
enum class Observable { total, head, tape };

std::string_view to_string(GrowthClass c) noexcept;
std::string_view to_string(Observable o) noexcept;

struct GrowthThresholds {
  double flat = 1e-4;         ///< max D^2 below this over the whole trace: flat
  double exponential = 0.05;  ///< ln D^2 slope per step at or above this: exponential
  double saturation = 0.1;    ///< fit window ends at the first D^2 reaching this
  double floor = 1e-14;       ///< records below this are ignored in the fit

  bool operator==(const GrowthThresholds&) const = default;
};

struct GrowthClassification {
  GrowthClass growth = GrowthClass::flat;
  double rate = 0.0;  ///< least-squares slope of ln D^2 against n
  double max_d2 = 0.0;
  std::size_t fit_points = 0;
};

GrowthClassification classify_growth(const std::vector<SensitivityRecord>& trace,
                                     const GrowthThresholds& thresholds = {},
                                     Observable observable = Observable::total);

}  // namespace qtm
