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

#include "qtm/quantum_core.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace qtm {

namespace {

constexpr cplx kI{0.0, 1.0};

void check_spin_value(int v, const char* what) {
  if (v != -1 && v != 1) {
    throw std::invalid_argument(fmt::format("{} spin value must be -1 or 1, got {}", what, v));
  }
}

}  // namespace

Spinor tape_spinor(TapeState tape) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (tape) {
    case TapeState::m1:
      return {cplx{1.0, 0.0}, cplx{0.0, 0.0}};
    case TapeState::p1:
      return {cplx{0.0, 0.0}, cplx{1.0, 0.0}};
    case TapeState::plus:
      return {cplx{h, 0.0}, cplx{h, 0.0}};
    case TapeState::minus:
      return {cplx{h, 0.0}, cplx{-h, 0.0}};
  }
  return {};
}

Spinor head_spinor(double phi) {
  return {cplx{std::cos(phi / 2.0), 0.0}, -kI * std::sin(phi / 2.0)};
}

NetworkState NetworkState::basis(int head, int tape) {
  check_spin_value(head, "head");
  check_spin_value(tape, "tape");
  std::array<cplx, 4> amps{};
  amps[index(head, tape)] = 1.0;
  return NetworkState(amps);
}

NetworkState NetworkState::product(const Spinor& head, const Spinor& tape) {
  return NetworkState({head[0] * tape[0], head[0] * tape[1], head[1] * tape[0],
                       head[1] * tape[1]});
}

NetworkState NetworkState::initial(double phi0, TapeState tape) {
  if (!std::isfinite(phi0)) throw std::invalid_argument("phi0 must be finite");
  return product(head_spinor(phi0), tape_spinor(tape));
}

cplx NetworkState::amplitude(int head, int tape) const {
  check_spin_value(head, "head");
  check_spin_value(tape, "tape");
  return amplitudes_[index(head, tape)];
}

double NetworkState::norm_sq() const noexcept {
  double s = 0.0;
  for (const auto& a : amplitudes_) s += std::norm(a);
  return s;
}

double DensityMatrix2::min_eigenvalue() const noexcept {
  const double a = entries[0][0].real();
  const double d = entries[1][1].real();
  const double off = std::abs(0.5 * (entries[0][1] + std::conj(entries[1][0])));
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + off * off);
  return 0.5 * (a + d) - half_gap;
}

NetworkState head_rotation(const NetworkState& state, double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument(fmt::format("rotation angle must be finite, got {}", alpha));
  }
  const double c = std::cos(alpha / 2.0);
  const cplx mis = -kI * std::sin(alpha / 2.0);
  const auto& a = state.amplitudes();
  // Head index is the high bit: pairs (0, 2) and (1, 3) share a tape value.
  return NetworkState({c * a[0] + mis * a[2], c * a[1] + mis * a[3], mis * a[0] + c * a[2],
                       mis * a[1] + c * a[3]},
                      state.step());
}

NetworkState qcnot(const NetworkState& state) {
  const auto& a = state.amplitudes();
  return NetworkState({a[1], a[0], a[2], a[3]}, state.step());
}

NetworkState step(const NetworkState& state, const AngleSchedule& schedule) {
  const std::size_t n = state.step() + 1;
  if (n % 2 == 1) {
    return head_rotation(state, schedule.angle((n + 1) / 2)).at_step(n);
  }
  return qcnot(state).at_step(n);
}

std::vector<TrajectoryRecord> evolve(const NetworkState& initial, const AngleSchedule& schedule,
                                     std::size_t n_steps, std::size_t record_every) {
  if (record_every == 0) throw std::invalid_argument("record_every must be at least 1");
  std::vector<TrajectoryRecord> out;
  out.reserve(n_steps / record_every + 2);
  NetworkState psi = initial;
  out.push_back({psi.step(), psi});
  for (std::size_t i = 1; i <= n_steps; ++i) {
    psi = step(psi, schedule);
    if (i % record_every == 0 || i == n_steps) out.push_back({psi.step(), psi});
  }
  return out;
}

DensityMatrix2 reduce(const NetworkState& state, Subsystem subsystem) {
  const auto& a = state.amplitudes();
  DensityMatrix2 rho;
  rho.subsystem = subsystem;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      cplx sum{};
      for (int other = 0; other < 2; ++other) {
        const std::size_t ir = subsystem == Subsystem::head ? 2 * r + other : 2 * other + r;
        const std::size_t ic = subsystem == Subsystem::head ? 2 * c + other : 2 * other + c;
        sum += a[ir] * std::conj(a[ic]);
      }
      rho.entries[r][c] = sum;
    }
  }
  return rho;
}

BlochVector bloch(const DensityMatrix2& rho) {
  const auto& e = rho.entries;
  // Tr(rho sigma_j) with the sigma matrices of the (|-1>, |1>) basis.
  return {(e[0][1] + e[1][0]).real(), (kI * (e[1][0] - e[0][1])).real(),
          (e[1][1] - e[0][0]).real()};
}

double purity(const DensityMatrix2& rho) {
  double s = 0.0;
  for (const auto& row : rho.entries) {
    for (const auto& x : row) s += std::norm(x);
  }
  return s;
}

double overlap_sq(const NetworkState& psi, const NetworkState& psi_prime) {
  cplx ip{};
  for (std::size_t i = 0; i < 4; ++i) ip += std::conj(psi.amplitudes()[i]) * psi_prime.amplitudes()[i];
  return std::norm(ip);
}

}  // namespace qtm
