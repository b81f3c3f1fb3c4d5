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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qtm/export.hpp"
#include "qtm/quantum_core.hpp"
#include "qtm/sensitivity.hpp"
#include "qtm/substitution.hpp"

namespace qtm::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailure = 2, kIoError = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_config for --help; carries the rendered help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Command { simulate, pattern, sensitivity, sequence, verify };

struct ExperimentConfig {
  Command command = Command::simulate;
  std::string schedule = "regular";  // regular | qf | tm | pd | cf
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  Reduction reduction = Reduction::mod_2pi;
  double phi0 = 0.0;
  TapeState tape = TapeState::m1;
  std::size_t n_steps = 10000;
  std::size_t record_every = 1;
  std::optional<PerturbationSpec> perturbation;
  Observable observable = Observable::total;
  GrowthThresholds thresholds;
  double pattern_tolerance = 1e-6;
  std::string emit = "letters";  // sequence: letters | angles
  std::size_t length = 0;        // sequence: 0 means ceil(n_steps / 2)
  std::string out;               // empty: standard output
  Format format = Format::csv;

  bool operator==(const ExperimentConfig&) const = default;
};

/// Parses a decimal angle in radians or `<x>pi` (x defaults to 1).
double parse_angle(std::string_view token);

/// Parses `initial:<delta>` or `params:<d1>,<d2>`.
PerturbationSpec parse_perturbation(std::string_view token);

/// Parses subcommand and flags (program name excluded). `--config <file>`
/// loads a JSON config first; explicit flags override it.
ExperimentConfig parse_config(const std::vector<std::string>& args);

std::string serialize_config(const ExperimentConfig& config);
ExperimentConfig deserialize_config(std::string_view json_text);

std::string_view to_string(Command c) noexcept;

/// Schedule with enough capacity for config.n_steps (or the sequence length).
AngleSchedule make_schedule(const ExperimentConfig& config);

/// Executes one command. Data goes to config.out (with a `.meta.json` sidecar)
/// or to `out` when no path is set; summaries go to `out` when the data went
/// to a file and to `err` otherwise.
int run(const ExperimentConfig& config, std::ostream& out, std::ostream& err);

}  // namespace qtm::cli
