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

// Acceptance run. One line per criterion; exits nonzero if any of them
// fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "qtm/analytic.hpp"
#include "qtm/pattern.hpp"
#include "qtm/quantum_core.hpp"
#include "qtm/sensitivity.hpp"
#include "qtm/substitution.hpp"

using namespace qtm;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kA1 = 2.0 * kPi / 5.0;
constexpr std::size_t kSteps = 10000;

// Tolerances.
constexpr double kOracleTol = 1e-10;
constexpr double kRuntimeLimitS = 1.0;
constexpr double kCheckpointMinusTol = 1e-12;
constexpr double kCheckpointPlusTol = 1e-9;
constexpr double kPurityTol = 1e-12;
constexpr std::size_t kCollapseMax = 30;
constexpr std::size_t kSpreadMin = 1000;
constexpr double kMetricTol = 1e-12;
constexpr double kFrequencyTol = 1e-3;
constexpr double kNormTol = 1e-12;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %d %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  if (!ok) ++failures;
}

LetterSequence letters(const SubstitutionRule& rule) {
  return generate_letters(rule, kSteps / 2 + 1);
}

AngleSchedule regular() { return AngleSchedule::regular(kA1); }
AngleSchedule qf(double a2 = kA1 + 0.03 * kPi) {
  return AngleSchedule::substitution(letters(SubstitutionRule::fibonacci()), kA1, a2);
}
AngleSchedule thue() {
  return AngleSchedule::substitution(letters(SubstitutionRule::thue_morse()), kA1, kA1 + 0.1001 * kPi);
}
AngleSchedule pd() {
  return AngleSchedule::substitution(letters(SubstitutionRule::period_doubling()), kA1,
                                     kA1 + 0.03 * kPi);
}
AngleSchedule cf() { return AngleSchedule::chaotic_fibonacci(kA1, kA1 + 0.03 * kPi, kSteps / 2 + 1); }

std::vector<AngleSchedule> all_schedules() { return {regular(), qf(), thue(), pd(), cf()}; }

void oracle_equivalence() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const auto& s : {regular(), qf(), thue()}) {
    const auto traj = evolve(NetworkState::basis(-1, -1), s, kSteps);
    const auto closed = analytic_trajectory(s, kSteps);
    for (const auto& r : traj) {
      const auto b = bloch(reduce(r.state, Subsystem::head));
      const auto c = closed_form_bloch(closed.c_plus[r.step], closed.c_minus[r.step], closed.weights);
      worst = std::max({worst, std::abs(b.sigma2 - c.sigma2), std::abs(b.sigma3 - c.sigma3)});
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(1, "oracle equivalence", worst < kOracleTol && secs < kRuntimeLimitS,
         fmt::format("max |dev| = {:.3g} (< {:g}), runtime {:.3f} s (< {:g} s)", worst, kOracleTol,
                     secs, kRuntimeLimitS));
}

void minus_branch_bound() {
  std::size_t violations = 0;
  std::string detail;
  for (const auto& s : {qf(), thue()}) {
    const auto chk = verify_minus_bound(s, kSteps);
    violations += chk.violations;
    detail += fmt::format("{} max {:.6f} / bound {:.6f}; ", s.label(), chk.max_abs, chk.bound);
  }
  report(2, "minus-branch bound", violations == 0, detail + fmt::format("violations {}", violations));
}

void thue_morse_checks() {
  const double a2 = kA1 + 0.1001 * kPi;
  double worst_minus = 0.0, worst_plus = 0.0;
  const auto cps = thue_morse_checkpoints(kA1, a2, 1000);
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const double m = static_cast<double>(i + 1);
    worst_minus = std::max(worst_minus, std::abs(cps[i].c_minus));
    worst_plus = std::max(worst_plus, std::abs(cps[i].c_plus - 2.0 * (kA1 + a2) * m));
  }
  const bool ok = cps.size() == 1000 && worst_minus < kCheckpointMinusTol && worst_plus < kCheckpointPlusTol;
  report(3, "thue-morse checkpoints", ok,
         fmt::format("{} checkpoints, max |C-| = {:.3g}, max |C+ - 2(a1+a2)m| = {:.3g}", cps.size(),
                     worst_minus, worst_plus));
}

void no_entanglement() {
  double worst = 0.0;
  for (const auto& s : all_schedules()) {
    for (auto tape : {TapeState::plus, TapeState::minus}) {
      for (const auto& r : evolve(NetworkState::initial(0.0, tape), s, kSteps)) {
        worst = std::max(worst, std::abs(1.0 - purity(reduce(r.state, Subsystem::head))));
      }
    }
  }
  report(4, "no-entanglement sector", worst < kPurityTol,
         fmt::format("max |1 - purity| = {:.3g} (< {:g})", worst, kPurityTol));
}

std::size_t distinct(const AngleSchedule& s) {
  return count_distinct_points(head_pattern(evolve(NetworkState::basis(-1, -1), s, kSteps)));
}

void pattern_collapse() {
  const std::size_t equal = distinct(qf(kA1));
  const std::size_t offset = distinct(qf(kA1 + 0.05 * kPi));
  report(5, "pattern collapse", equal <= kCollapseMax && offset > kSpreadMin,
         fmt::format("a2 = a1: {} points (<= {}); a2 = a1 + 0.05pi: {} points (> {})", equal,
                     kCollapseMax, offset, kSpreadMin));
}

void sensitivity_classes() {
  struct Case {
    std::string name;
    AngleSchedule schedule;
    PerturbationSpec spec;
    GrowthClass expected;
  };
  const auto initial = PerturbationSpec::initial_state(0.001);
  const auto params = PerturbationSpec::parameters(0.001 * kPi, 0.001 * kPi);
  const std::vector<Case> cases{
      {"regular/initial", regular(), initial, GrowthClass::flat},
      {"qf/initial", qf(), initial, GrowthClass::bounded},
      {"qf/params", qf(), params, GrowthClass::bounded},
      {"tm/initial", thue(), initial, GrowthClass::bounded},
      {"tm/params", thue(), params, GrowthClass::bounded},
      {"cf/initial", cf(), initial, GrowthClass::exponential},
  };
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto trace = run_experiment({NetworkState::basis(-1, -1), c.schedule, kSteps}, c.spec);
    std::string got;
    try {
      const auto cls = classify_growth(trace);
      got = fmt::format("{} (max {:.2g}, rate {:.3g})", to_string(cls.growth), cls.max_d2, cls.rate);
      if (cls.growth != c.expected) {
        ok = false;
        got += fmt::format(" expected {}", to_string(c.expected));
      }
    } catch (const std::exception& e) {
      ok = false;
      got = fmt::format("undetermined ({})", e.what());
    }
    detail += fmt::format("{} {}; ", c.name, got);
  }
  detail.resize(detail.size() - 2);
  report(6, "sensitivity classes", ok, detail);
}

void metric_properties() {
  std::mt19937_64 rng(2026);
  std::normal_distribution<double> g;
  auto random_state = [&] {
    std::array<cplx, 4> a;
    double n = 0.0;
    for (auto& x : a) {
      x = {g(rng), g(rng)};
      n += std::norm(x);
    }
    for (auto& x : a) x /= std::sqrt(n);
    return NetworkState(a);
  };
  double worst_identity = 0.0, lo = 2.0, hi = 0.0, worst_self = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_state();
    const auto b = random_state();
    const auto ra = DensityOperator::pure(a), rb = DensityOperator::pure(b);
    const double d = distance_sq(ra, rb);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
    worst_self = std::max(worst_self, std::abs(distance_sq(ra, ra)));
    worst_identity = std::max(worst_identity, std::abs(d - 2.0 * (1.0 - overlap_sq(a, b))));
  }
  const bool ok = lo >= 0.0 && hi <= 2.0 && worst_self < kMetricTol && worst_identity < kMetricTol;
  report(7, "metric properties", ok,
         fmt::format("D2 in [{:.4f}, {:.4f}], max D2(r,r) = {:.3g}, max |D2 - 2(1-O)| = {:.3g}", lo, hi,
                     worst_self, worst_identity));
}

// Letter-by-letter substitution, independent of the library expansion.
std::string hand_iterate(const std::string& a_image, const std::string& b_image, int rounds) {
  std::string w = "a";
  for (int r = 0; r < rounds; ++r) {
    std::string next;
    for (char c : w) next += (c == 'a') ? a_image : b_image;
    w = next;
  }
  return w;
}

void sequence_suite() {
  const auto fib = expand_rule(SubstitutionRule::fibonacci(), "a", 6);
  const auto tmw = expand_rule(SubstitutionRule::thue_morse(), "a", 4);
  const auto pdw = expand_rule(SubstitutionRule::period_doubling(), "a", 8);
  const bool words = fib.starts_with("abaababaabaababa") && tmw == "abbabaabbaababba" &&
                     pdw == hand_iterate("ab", "aa", 8);
  const auto seq = generate_letters(SubstitutionRule::fibonacci(), 10946);
  const double freq = letter_frequency(seq, 'a');
  const double target = (std::sqrt(5.0) - 1.0) / 2.0;
  report(8, "sequence suite", words && std::abs(freq - target) < kFrequencyTol,
         fmt::format("printed words {}, qf a-frequency {:.6f} vs {:.6f} (tol {:g})",
                     words ? "match" : "MISMATCH", freq, target, kFrequencyTol));
}

void unitarity() {
  double worst = 0.0;
  for (const auto& s : all_schedules()) {
    const auto traj = evolve(NetworkState::basis(-1, -1), s, kSteps, kSteps);
    worst = std::max(worst, std::abs(traj.back().state.norm_sq() - 1.0));
  }
  report(9, "unitarity", worst < kNormTol, fmt::format("max norm drift {:.3g} (< {:g})", worst, kNormTol));
}

}  // namespace

int main() {
  oracle_equivalence();
  minus_branch_bound();
  thue_morse_checks();
  no_entanglement();
  pattern_collapse();
  sensitivity_classes();
  metric_properties();
  sequence_suite();
  unitarity();
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
