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

#include "qtm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "qtm/analytic.hpp"
#include "qtm/pattern.hpp"
#include "qtm/quantum_core.hpp"
#include "qtm/substitution.hpp"

namespace qtm {

namespace {

struct NamedSchedule {
  std::string name;
  AngleSchedule schedule;
};

std::vector<NamedSchedule> default_schedules(const VerifyOptions& o) {
  const std::size_t letters = o.n_steps / 2 + 1;
  const double a1 = o.alpha1;
  return {
      {"regular", AngleSchedule::regular(a1)},
      {"qf", AngleSchedule::substitution(generate_letters(SubstitutionRule::fibonacci(), letters),
                                         a1, a1 + o.qf_offset)},
      {"tm", AngleSchedule::substitution(generate_letters(SubstitutionRule::thue_morse(), letters),
                                         a1, a1 + o.tm_offset)},
  };
}

CheckResult at_most(std::string name, double observed, double limit) {
  return {std::move(name), observed <= limit, observed, limit};
}

CheckResult below(std::string name, double observed, double limit) {
  return {std::move(name), observed < limit, observed, limit};
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& o) {
  std::vector<CheckResult> out;
  const auto schedules = default_schedules(o);
  const std::size_t letters = o.n_steps / 2 + 1;

  for (const auto& [name, schedule] : schedules) {
    const NetworkState start = NetworkState::basis(-1, -1);
    const auto traj = evolve(start, schedule, o.n_steps, 1);
    const auto oracle = analytic_trajectory(schedule, o.n_steps);
    double dev = 0.0, plane = 0.0, drift = 0.0, length_gap = 0.0;
    for (const auto& rec : traj) {
      const BlochVector b = bloch(reduce(rec.state, Subsystem::head));
      const PlaneBloch c =
          closed_form_bloch(oracle.c_plus[rec.step], oracle.c_minus[rec.step], oracle.weights);
      dev = std::max({dev, std::abs(b.sigma2 - c.sigma2), std::abs(b.sigma3 - c.sigma3)});
      plane = std::max(plane, std::abs(b.sigma1));
      drift = std::max(drift, std::abs(rec.state.norm_sq() - 1.0));
      length_gap = std::max(length_gap, std::abs(std::sqrt(b.length_sq()) -
                                                 std::abs(std::cos(oracle.b_n[rec.step]))));
    }
    out.push_back(below(fmt::format("oracle equivalence [{}]", name), dev, 1e-10));
    out.push_back(below(fmt::format("sigma1 plane confinement [{}]", name), plane, 1e-12));
    out.push_back(below(fmt::format("unitarity [{}]", name), drift, 1e-12));
    out.push_back(below(fmt::format("bloch length equals |cos B| [{}]", name), length_gap, 1e-10));

    const NetworkState plus = NetworkState::initial(0.0, TapeState::plus);
    const NetworkState minus = NetworkState::initial(0.0, TapeState::minus);
    const auto tp = evolve(plus, schedule, o.n_steps, 1);
    const auto tm = evolve(minus, schedule, o.n_steps, 1);
    double branch = 0.0, purity_gap = 0.0;
    for (std::size_t i = 0; i < tp.size(); ++i) {
      const std::size_t n = tp[i].step;
      const BlochVector bp = bloch(reduce(tp[i].state, Subsystem::head));
      const BlochVector bm = bloch(reduce(tm[i].state, Subsystem::head));
      const double cp = oracle.c_plus[n];
      const double cm = oracle.c_minus[n];
      branch = std::max({branch, std::abs(bp.sigma2 - std::sin(cp)),
                         std::abs(bp.sigma3 + std::cos(cp)), std::abs(bm.sigma2 - std::sin(cm)),
                         std::abs(bm.sigma3 + std::cos(cm))});
      purity_gap = std::max({purity_gap, std::abs(purity(reduce(tp[i].state, Subsystem::head)) - 1.0),
                             std::abs(purity(reduce(tm[i].state, Subsystem::head)) - 1.0)});
    }
    out.push_back(below(fmt::format("branch oracle [{}]", name), branch, 1e-10));
    out.push_back(below(fmt::format("no entanglement for |+>,|-> tape [{}]", name), purity_gap, 1e-12));

    if (schedule.kind() == ScheduleKind::substitution) {
      const BoundCheck bound = verify_minus_bound(schedule, o.n_steps);
      out.push_back(at_most(fmt::format("minus-branch bound [{}]", name), bound.max_abs, bound.bound));
    }
  }

  {
    const AngleSchedule tm = AngleSchedule::substitution(
        generate_letters(SubstitutionRule::thue_morse(), letters), o.alpha1, o.alpha1 + o.tm_offset);
    const auto oracle = analytic_trajectory(tm, o.n_steps);
    double minus_gap = 0.0, plus_gap = 0.0;
    for (const auto& cp : thue_morse_checkpoints(tm.alpha1(), tm.alpha2(), o.n_steps / 8)) {
      minus_gap = std::max(minus_gap, std::abs(oracle.c_minus[cp.n] - cp.c_minus));
      plus_gap = std::max(plus_gap, std::abs(oracle.c_plus[cp.n] - cp.c_plus));
    }
    out.push_back(below("thue-morse checkpoints C(-) = 0", minus_gap, 1e-12));
    out.push_back(below("thue-morse checkpoints C(+) = 2(a1+a2)m", plus_gap, 1e-9));
  }

  {
    const AngleSchedule equal = AngleSchedule::substitution(
        generate_letters(SubstitutionRule::fibonacci(), letters), o.alpha1, o.alpha1);
    const auto traj = evolve(NetworkState::basis(-1, -1), equal, o.n_steps, 1);
    const auto points = head_pattern(traj);
    const auto distinct = static_cast<double>(count_distinct_points(points));
    out.push_back(at_most("pattern collapse at alpha1 = alpha2", distinct, 30.0));
  }

  {
    const AngleSchedule cf = AngleSchedule::chaotic_fibonacci(o.alpha1, o.alpha1 + o.qf_offset,
                                                              letters, Reduction::mod_2pi);
    const auto tp = evolve(NetworkState::initial(0.0, TapeState::plus), cf, o.n_steps, 1);
    const auto tm = evolve(NetworkState::initial(0.0, TapeState::minus), cf, o.n_steps, 1);
    double purity_gap = 0.0, drift = 0.0;
    for (std::size_t i = 0; i < tp.size(); ++i) {
      purity_gap = std::max({purity_gap, std::abs(purity(reduce(tp[i].state, Subsystem::head)) - 1.0),
                             std::abs(purity(reduce(tm[i].state, Subsystem::head)) - 1.0)});
      drift = std::max(drift, std::abs(tp[i].state.norm_sq() - 1.0));
    }
    out.push_back(below("no entanglement for |+>,|-> tape [cf]", purity_gap, 1e-12));
    out.push_back(below("unitarity [cf]", drift, 1e-12));
  }
  return out;
}

}  // namespace qtm
