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

// Two-spin network: Turing head S and one tape spin.
//
// Basis states |j k> with j (head), k (tape) in {-1, 1}. Amplitudes are stored
// head-major in the order (-1,-1), (-1,1), (1,-1), (1,1). |-1> is the sigma_3
// eigenvector with eigenvalue -1, so in the local basis (|-1>, |1>)
//
//   sigma_1 = [[0, 1], [1, 0]],  sigma_2 = [[0, i], [-i, 0]],  sigma_3 = diag(-1, 1).
//
// Step n = 2m-1 applies exp(-i sigma_1^(S) alpha_m / 2), step n = 2m applies
// the QCNOT that flips the tape when the head is |-1>.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "qtm/substitution.hpp"

namespace qtm {

using cplx = std::complex<double>;

/// Two-component spinor in the local basis (|-1>, |1>).
using Spinor = std::array<cplx, 2>;

enum class Subsystem { head, tape };

/// Tape preparation: sigma_3 eigenstates |-1>, |1> or sigma_1 eigenstates |+>, |->.
enum class TapeState { m1, p1, plus, minus };

Spinor tape_spinor(TapeState tape);

/// exp(-i sigma_1 phi / 2) |-1>
Spinor head_spinor(double phi);

class NetworkState {
 public:
  NetworkState() = default;
  explicit NetworkState(const std::array<cplx, 4>& amplitudes, std::size_t step = 0)
      : amplitudes_(amplitudes), step_(step) {}

  /// |j k> with j, k in {-1, 1}.
  static NetworkState basis(int head, int tape);
  static NetworkState product(const Spinor& head, const Spinor& tape);
  /// exp(-i sigma_1^(S) phi0 / 2) |-1> (x) |tape>
  static NetworkState initial(double phi0, TapeState tape);

  [[nodiscard]] const std::array<cplx, 4>& amplitudes() const noexcept { return amplitudes_; }
  [[nodiscard]] cplx amplitude(int head, int tape) const;
  [[nodiscard]] std::size_t step() const noexcept { return step_; }
  [[nodiscard]] double norm_sq() const noexcept;

  [[nodiscard]] NetworkState at_step(std::size_t step) const {
    return NetworkState(amplitudes_, step);
  }

  static constexpr std::size_t index(int head, int tape) noexcept {
    return (head == 1 ? 2u : 0u) + (tape == 1 ? 1u : 0u);
  }

 private:
  std::array<cplx, 4> amplitudes_{cplx{1.0, 0.0}, {}, {}, {}};
  std::size_t step_ = 0;
};

struct BlochVector {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double sigma3 = 0.0;

  [[nodiscard]] double length_sq() const noexcept {
    return sigma1 * sigma1 + sigma2 * sigma2 + sigma3 * sigma3;
  }
};

/// Reduced 2x2 density operator of one spin.
struct DensityMatrix2 {
  std::array<std::array<cplx, 2>, 2> entries{};
  Subsystem subsystem = Subsystem::head;

  [[nodiscard]] cplx trace() const noexcept { return entries[0][0] + entries[1][1]; }
  /// Smallest eigenvalue of the Hermitian part.
  [[nodiscard]] double min_eigenvalue() const noexcept;
};

NetworkState head_rotation(const NetworkState& state, double alpha);
NetworkState qcnot(const NetworkState& state);

/// Advances one step; the parity of state.step() + 1 picks the unitary.
NetworkState step(const NetworkState& state, const AngleSchedule& schedule);

struct TrajectoryRecord {
  std::size_t step = 0;
  NetworkState state;
};

/// Records the initial state, every `record_every`-th step and the final step.
std::vector<TrajectoryRecord> evolve(const NetworkState& initial, const AngleSchedule& schedule,
                                     std::size_t n_steps, std::size_t record_every = 1);

/// Partial trace onto one spin.
DensityMatrix2 reduce(const NetworkState& state, Subsystem subsystem);

BlochVector bloch(const DensityMatrix2& rho);

/// Tr(rho^2)
double purity(const DensityMatrix2& rho);

/// |<psi|psi'>|^2
double overlap_sq(const NetworkState& psi, const NetworkState& psi_prime);

}  // namespace qtm
