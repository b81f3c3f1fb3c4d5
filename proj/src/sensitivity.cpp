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

#include "qtm/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

#include <fmt/format.h>

namespace qtm {

DensityOperator::DensityOperator(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim_ * dim_) {
    throw std::invalid_argument(
        fmt::format("density operator of dimension {} needs {} entries, got {}", dim_,
                    dim_ * dim_, entries_.size()));
  }
}

DensityOperator DensityOperator::from(const DensityMatrix2& rho) {
  const auto& e = rho.entries;
  return DensityOperator(2, {e[0][0], e[0][1], e[1][0], e[1][1]});
}

DensityOperator DensityOperator::pure(const NetworkState& psi) {
  const auto& a = psi.amplitudes();
  std::vector<cplx> entries(16);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) entries[r * 4 + c] = a[r] * std::conj(a[c]);
  }
  return DensityOperator(4, std::move(entries));
}

double distance_sq(const DensityOperator& rho, const DensityOperator& rho_prime) {
  if (rho.dim() != rho_prime.dim()) {
    throw std::invalid_argument(fmt::format("cannot compare density operators of dimension {} and {}",
                                            rho.dim(), rho_prime.dim()));
  }
  // Tr(X^2) = sum |X_rc|^2 for Hermitian X.
  double s = 0.0;
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    for (std::size_t c = 0; c < rho.dim(); ++c) s += std::norm(rho(r, c) - rho_prime(r, c));
  }
  return s;
}

double distance_sq(const DensityMatrix2& rho, const DensityMatrix2& rho_prime) {
  return distance_sq(DensityOperator::from(rho), DensityOperator::from(rho_prime));
}

PerturbationSpec PerturbationSpec::initial_state(double delta) {
  PerturbationSpec p{Kind::initial_state, delta, 0.0, 0.0};
  p.validate();
  return p;
}

PerturbationSpec PerturbationSpec::parameters(double delta1, double delta2) {
  PerturbationSpec p{Kind::parameters, 0.0, delta1, delta2};
  p.validate();
  return p;
}

void PerturbationSpec::validate() const {
  if (!std::isfinite(delta) || !std::isfinite(delta1) || !std::isfinite(delta2)) {
    throw std::invalid_argument("perturbation offsets must be finite");
  }
  if (kind == Kind::initial_state && (delta1 != 0.0 || delta2 != 0.0)) {
    throw std::invalid_argument("initial-state perturbation carries no parameter offsets");
  }
  if (kind == Kind::parameters && delta != 0.0) {
    throw std::invalid_argument("parameter perturbation carries no initial-state rotation");
  }
}

RunConfig perturbed(const RunConfig& reference, const PerturbationSpec& perturbation) {
  perturbation.validate();
  RunConfig out = reference;
  switch (perturbation.kind) {
    case PerturbationSpec::Kind::initial_state:
      out.initial = head_rotation(reference.initial, perturbation.delta);
      if (reference.schedule.kind() == ScheduleKind::chaotic_fibonacci) {
        out.schedule = reference.schedule.with_offsets(perturbation.delta, perturbation.delta);
      }
      break;
    case PerturbationSpec::Kind::parameters:
      out.schedule = reference.schedule.with_offsets(perturbation.delta1, perturbation.delta2);
      break;
  }
  return out;
}

std::vector<SensitivityRecord> run_experiment(const RunConfig& reference,
                                              const PerturbationSpec& perturbation) {
  const RunConfig other = perturbed(reference, perturbation);
  auto perturbed_run = std::async(std::launch::async, [&other] {
    return evolve(other.initial, other.schedule, other.n_steps, 1);
  });
  const auto ref = evolve(reference.initial, reference.schedule, reference.n_steps, 1);
  const auto per = perturbed_run.get();

  std::vector<SensitivityRecord> out;
  out.reserve(ref.size());
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const NetworkState& a = ref[i].state;
    const NetworkState& b = per[i].state;
    SensitivityRecord rec;
    rec.n = ref[i].step;
    rec.overlap_sq = overlap_sq(a, b);
    rec.d2_total = distance_sq(DensityOperator::pure(a), DensityOperator::pure(b));
    rec.d2_head = distance_sq(reduce(a, Subsystem::head), reduce(b, Subsystem::head));
    rec.d2_tape = distance_sq(reduce(a, Subsystem::tape), reduce(b, Subsystem::tape));
    out.push_back(rec);
  }
  return out;
}

std::string_view to_string(GrowthClass c) noexcept {
  switch (c) {
    case GrowthClass::flat:
      return "flat";
    case GrowthClass::bounded:
      return "bounded";
    case GrowthClass::exponential:
      return "exponential";
  }
  return "unknown";
}

std::string_view to_string(Observable o) noexcept {
  switch (o) {
    case Observable::total:
      return "total";
    case Observable::head:
      return "head";
    case Observable::tape:
      return "tape";
  }
  return "unknown";
}

GrowthClassification classify_growth(const std::vector<SensitivityRecord>& trace,
                                     const GrowthThresholds& thresholds, Observable observable) {
  auto value = [observable](const SensitivityRecord& r) {
    switch (observable) {
      case Observable::head:
        return r.d2_head;
      case Observable::tape:
        return r.d2_tape;
      case Observable::total:
        break;
    }
    return r.d2_total;
  };

  GrowthClassification out;
  for (const auto& r : trace) out.max_d2 = std::max(out.max_d2, value(r));
  if (out.max_d2 < thresholds.flat) {
    out.growth = GrowthClass::flat;
    return out;
  }

  // Least squares of ln D^2 against n over the pre-saturation prefix.
  double sn = 0.0, sl = 0.0, snn = 0.0, snl = 0.0;
  std::size_t k = 0;
  for (const auto& r : trace) {
    const double d = value(r);
    if (d >= thresholds.saturation) break;
    if (d < thresholds.floor) continue;
    const auto n = static_cast<double>(r.n);
    const double l = std::log(d);
    sn += n;
    sl += l;
    snn += n * n;
    snl += n * l;
    ++k;
  }
  if (k < 10) {
    throw std::invalid_argument(fmt::format(
        "growth fit needs at least 10 records above {} before saturation, found {}",
        thresholds.floor, k));
  }
  const auto kd = static_cast<double>(k);
  out.fit_points = k;
  out.rate = (kd * snl - sn * sl) / (kd * snn - sn * sn);
  out.growth = out.rate >= thresholds.exponential ? GrowthClass::exponential : GrowthClass::bounded;
  return out;
}

}  // namespace qtm
