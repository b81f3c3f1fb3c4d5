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

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <ostream>

#include <fmt/format.h>

#include "json.hpp"
#include "qtm/cli.hpp"
#include "qtm/pattern.hpp"
#include "qtm/verify.hpp"

namespace qtm::cli {

namespace {

using json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t letters_needed(const ExperimentConfig& c) { return c.n_steps / 2 + 1; }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Writes the data artifact either to config.out or to `fallback`, and returns
// the stream that summaries should go to.
std::ostream& emit(const ExperimentConfig& c, std::ostream& out, std::ostream& err,
                   const std::function<void(std::ostream&)>& write, const json& summary) {
  if (c.out.empty()) {
    write(out);
    return err;
  }
  {
    std::ofstream file(c.out, std::ios::binary);
    if (!file) throw IoError(fmt::format("cannot open '{}' for writing", c.out));
    write(file);
    if (!file.flush()) throw IoError(fmt::format("write to '{}' failed", c.out));
  }
  json meta;
  meta["command"] = to_string(c.command);
  meta["config"] = json::parse(serialize_config(c));
  meta["summary"] = summary;
  meta["generated_at"] = utc_timestamp();
  const std::string sidecar = c.out + ".meta.json";
  std::ofstream file(sidecar);
  if (!file) throw IoError(fmt::format("cannot open '{}' for writing", sidecar));
  file << meta.dump(2) << '\n';
  if (!file.flush()) throw IoError(fmt::format("write to '{}' failed", sidecar));
  return out;
}

int run_simulate(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const auto traj = evolve(NetworkState::initial(c.phi0, c.tape), make_schedule(c), c.n_steps,
                           c.record_every);
  const Table table = trajectory_table(traj);
  json summary = {{"records", table.rows.size()},
                  {"final_norm_drift", traj.back().state.norm_sq() - 1.0}};
  emit(c, out, err, [&](std::ostream& os) { write_table(os, table, c.format); }, summary);
  return kSuccess;
}

int run_pattern(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const auto traj = evolve(NetworkState::initial(c.phi0, c.tape), make_schedule(c), c.n_steps,
                           c.record_every);
  const auto points = head_pattern(traj);
  const std::size_t distinct = count_distinct_points(points, c.pattern_tolerance);
  json summary = {{"points", points.size()}, {"distinct_points", distinct},
                  {"tolerance", c.pattern_tolerance}};
  std::ostream& log = emit(
      c, out, err, [&](std::ostream& os) { write_table(os, pattern_table(points), c.format); },
      summary);
  log << "points " << points.size() << '\n' << "distinct_points " << distinct << '\n';
  return kSuccess;
}

int run_sensitivity(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  if (!c.perturbation) throw UsageError("sensitivity: --perturb is required");
  const RunConfig reference{NetworkState::initial(c.phi0, c.tape), make_schedule(c), c.n_steps};
  const auto trace = run_experiment(reference, *c.perturbation);

  std::string growth;
  json summary;
  try {
    const auto cls = classify_growth(trace, c.thresholds, c.observable);
    growth = std::string(to_string(cls.growth));
    summary = {{"growth_class", growth}, {"rate", cls.rate}, {"max_d2", cls.max_d2},
               {"fit_points", cls.fit_points}, {"observable", to_string(c.observable)}};
  } catch (const std::invalid_argument& e) {
    growth = "undetermined";
    summary = {{"growth_class", growth}, {"reason", e.what()}};
  }

  std::vector<SensitivityRecord> kept;
  for (const auto& r : trace) {
    if (r.n % c.record_every == 0 || r.n == c.n_steps) kept.push_back(r);
  }
  std::ostream& log = emit(
      c, out, err, [&](std::ostream& os) { write_table(os, sensitivity_table(kept), c.format); },
      summary);
  log << "growth_class " << growth << '\n';
  if (summary.contains("rate")) {
    log << fmt::format("rate {:.6g}\nmax_d2 {:.6g}\n", summary["rate"].get<double>(),
                       summary["max_d2"].get<double>());
  }
  return kSuccess;
}

int run_sequence(const ExperimentConfig& c, std::ostream& out, std::ostream& err) {
  const std::size_t length = c.length > 0 ? c.length : (c.n_steps + 1) / 2;
  if (length == 0) throw UsageError("sequence: --length must be at least 1");
  if (c.emit == "letters") {
    if (c.schedule == "regular" || c.schedule == "cf") {
      throw UsageError(fmt::format("sequence: schedule '{}' has no letters; use --emit angles",
                                   c.schedule));
    }
    const auto seq = generate_letters(SubstitutionRule::by_name(c.schedule), length);
    json summary = {{"length", length}, {"frequency_a", letter_frequency(seq, 'a')}};
    emit(c, out, err, [&](std::ostream& os) { write_sequence(os, seq); }, summary);
    return kSuccess;
  }
  ExperimentConfig sized = c;
  sized.n_steps = 2 * length;
  const AngleSchedule schedule = make_schedule(sized);
  json summary = {{"length", length}};
  emit(c, out, err,
       [&](std::ostream& os) { write_table(os, schedule_table(schedule, length), c.format); },
       summary);
  return kSuccess;
}

int run_verify(const ExperimentConfig& c, std::ostream& out) {
  VerifyOptions options;
  options.n_steps = c.n_steps;
  const auto results = run_verification(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    out << fmt::format("{} {}: observed {:.3e}, limit {:.3e}\n", r.passed ? "PASS" : "FAIL", r.name,
                       r.observed, r.limit);
  }
  out << fmt::format("passed {} failed {}\n", results.size() - failed, failed);
  return failed == 0 ? kSuccess : kVerificationFailure;
}

}  // namespace

AngleSchedule make_schedule(const ExperimentConfig& c) {
  if (c.schedule == "regular") return AngleSchedule::regular(c.alpha1);
  if (c.schedule == "cf") {
    return AngleSchedule::chaotic_fibonacci(c.alpha1, c.alpha2, letters_needed(c), c.reduction);
  }
  return AngleSchedule::substitution(
      generate_letters(SubstitutionRule::by_name(c.schedule), letters_needed(c)), c.alpha1,
      c.alpha2);
}

int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::simulate:
        return run_simulate(config, out, err);
      case Command::pattern:
        return run_pattern(config, out, err);
      case Command::sensitivity:
        return run_sensitivity(config, out, err);
      case Command::sequence:
        return run_sequence(config, out, err);
      case Command::verify:
        return run_verify(config, out);
    }
  } catch (const IoError& e) {
    err << "qtm: " << e.what() << '\n';
    return kIoError;
  } catch (const UsageError& e) {
    err << "qtm: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "qtm: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapacityError& e) {
    err << "qtm: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace qtm::cli
