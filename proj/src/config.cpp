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

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "qtm/cli.hpp"

namespace qtm::cli {

namespace {

using json = nlohmann::ordered_json;

double parse_real(std::string_view token, std::string_view whole) {
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError(fmt::format("malformed number '{}'", whole));
  }
  return v;
}

std::size_t parse_count(std::string_view token, std::string_view flag) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    throw UsageError(fmt::format("{}: malformed count '{}'", flag, token));
  }
  return v;
}

TapeState parse_tape(std::string_view token) {
  if (token == "m1") return TapeState::m1;
  if (token == "p1") return TapeState::p1;
  if (token == "plus") return TapeState::plus;
  if (token == "minus") return TapeState::minus;
  throw UsageError(fmt::format("--tape: unknown tape state '{}' (expected m1, p1, plus, minus)", token));
}

std::string_view tape_name(TapeState t) {
  switch (t) {
    case TapeState::m1:
      return "m1";
    case TapeState::p1:
      return "p1";
    case TapeState::plus:
      return "plus";
    case TapeState::minus:
      return "minus";
  }
  return "m1";
}

Command parse_command(std::string_view s) {
  if (s == "simulate") return Command::simulate;
  if (s == "pattern") return Command::pattern;
  if (s == "sensitivity") return Command::sensitivity;
  if (s == "sequence") return Command::sequence;
  if (s == "verify") return Command::verify;
  throw UsageError(fmt::format("unknown command '{}'", s));
}

Observable parse_observable(std::string_view s) {
  if (s == "total") return Observable::total;
  if (s == "head") return Observable::head;
  if (s == "tape") return Observable::tape;
  throw UsageError(fmt::format("--observable: unknown observable '{}'", s));
}

Reduction parse_reduction(std::string_view s) {
  if (s == "mod2pi" || s == "mod_2pi") return Reduction::mod_2pi;
  if (s == "none") return Reduction::none;
  throw UsageError(fmt::format("--reduction: unknown reduction '{}'", s));
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw UsageError(fmt::format("--format: unknown format '{}'", s));
}

void check_schedule_name(std::string_view s) {
  if (s == "regular" || s == "qf" || s == "tm" || s == "pd" || s == "cf") return;
  throw UsageError(fmt::format("--schedule: unknown schedule '{}'", s));
}

ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(fmt::format("--config: cannot read '{}'", path));
  std::stringstream buf;
  buf << in.rdbuf();
  return deserialize_config(buf.str());
}

// Raw flag values shared by every subcommand.
struct RawFlags {
  std::string config, schedule, alpha1, alpha2, reduction, phi0, tape, steps, record_every, perturb,
      observable, flat, exponential, saturation, tolerance, emit, length, out, format;
};

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::simulate:
      return "simulate";
    case Command::pattern:
      return "pattern";
    case Command::sensitivity:
      return "sensitivity";
    case Command::sequence:
      return "sequence";
    case Command::verify:
      return "verify";
  }
  return "simulate";
}

double parse_angle(std::string_view token) {
  if (token.empty()) throw UsageError("malformed angle ''");
  if (token.size() >= 2 && token.substr(token.size() - 2) == "pi") {
    std::string_view factor = token.substr(0, token.size() - 2);
    double x = 1.0;
    if (factor == "-") {
      x = -1.0;
    } else if (!factor.empty() && factor != "+") {
      try {
        x = parse_real(factor, token);
      } catch (const UsageError&) {
        throw UsageError(fmt::format("malformed angle '{}'", token));
      }
    }
    return x * std::numbers::pi;
  }
  try {
    return parse_real(token, token);
  } catch (const UsageError&) {
    throw UsageError(fmt::format("malformed angle '{}'", token));
  }
}

PerturbationSpec parse_perturbation(std::string_view token) {
  const auto colon = token.find(':');
  if (colon == std::string_view::npos) {
    throw UsageError(fmt::format("--perturb: expected initial:<delta> or params:<d1>,<d2>, got '{}'", token));
  }
  const std::string_view kind = token.substr(0, colon);
  const std::string_view rest = token.substr(colon + 1);
  if (kind == "initial") return PerturbationSpec::initial_state(parse_angle(rest));
  if (kind == "params") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw UsageError(fmt::format("--perturb: params needs two offsets, got '{}'", token));
    }
    return PerturbationSpec::parameters(parse_angle(rest.substr(0, comma)),
                                        parse_angle(rest.substr(comma + 1)));
  }
  throw UsageError(fmt::format("--perturb: unknown perturbation kind '{}'", kind));
}

std::string serialize_config(const ExperimentConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["schedule"] = c.schedule;
  j["alpha1"] = c.alpha1;
  j["alpha2"] = c.alpha2;
  j["reduction"] = c.reduction == Reduction::mod_2pi ? "mod2pi" : "none";
  j["phi0"] = c.phi0;
  j["tape"] = tape_name(c.tape);
  j["steps"] = c.n_steps;
  j["record_every"] = c.record_every;
  if (c.perturbation) {
    const auto& p = *c.perturbation;
    if (p.kind == PerturbationSpec::Kind::initial_state) {
      j["perturbation"] = {{"kind", "initial"}, {"delta", p.delta}};
    } else {
      j["perturbation"] = {{"kind", "params"}, {"delta1", p.delta1}, {"delta2", p.delta2}};
    }
  }
  j["observable"] = to_string(c.observable);
  j["thresholds"] = {{"flat", c.thresholds.flat},
                     {"exponential", c.thresholds.exponential},
                     {"saturation", c.thresholds.saturation},
                     {"floor", c.thresholds.floor}};
  j["pattern_tolerance"] = c.pattern_tolerance;
  j["emit"] = c.emit;
  j["length"] = c.length;
  j["out"] = c.out;
  j["format"] = c.format == Format::csv ? "csv" : "json";
  return j.dump(2);
}

ExperimentConfig deserialize_config(std::string_view text) {
  ExperimentConfig c;
  try {
    const json j = json::parse(text);
    auto str = [&j](const char* key, const std::string& fallback) {
      return j.contains(key) ? j.at(key).get<std::string>() : fallback;
    };
    c.command = parse_command(str("command", "simulate"));
    c.schedule = str("schedule", c.schedule);
    check_schedule_name(c.schedule);
    c.alpha1 = j.value("alpha1", c.alpha1);
    c.alpha2 = j.value("alpha2", c.alpha1);
    c.reduction = parse_reduction(str("reduction", "mod2pi"));
    c.phi0 = j.value("phi0", c.phi0);
    c.tape = parse_tape(str("tape", "m1"));
    c.n_steps = j.value("steps", c.n_steps);
    c.record_every = j.value("record_every", c.record_every);
    if (j.contains("perturbation")) {
      const auto& p = j.at("perturbation");
      const auto kind = p.at("kind").get<std::string>();
      if (kind == "initial") {
        c.perturbation = PerturbationSpec::initial_state(p.at("delta").get<double>());
      } else if (kind == "params") {
        c.perturbation =
            PerturbationSpec::parameters(p.at("delta1").get<double>(), p.at("delta2").get<double>());
      } else {
        throw UsageError(fmt::format("config: unknown perturbation kind '{}'", kind));
      }
    }
    c.observable = parse_observable(str("observable", "total"));
    if (j.contains("thresholds")) {
      const auto& t = j.at("thresholds");
      c.thresholds.flat = t.value("flat", c.thresholds.flat);
      c.thresholds.exponential = t.value("exponential", c.thresholds.exponential);
      c.thresholds.saturation = t.value("saturation", c.thresholds.saturation);
      c.thresholds.floor = t.value("floor", c.thresholds.floor);
    }
    c.pattern_tolerance = j.value("pattern_tolerance", c.pattern_tolerance);
    c.emit = str("emit", c.emit);
    c.length = j.value("length", c.length);
    c.out = str("out", c.out);
    c.format = parse_format(str("format", "csv"));
  } catch (const json::exception& e) {
    throw UsageError(fmt::format("config: {}", e.what()));
  } catch (const std::invalid_argument& e) {
    throw UsageError(fmt::format("config: {}", e.what()));
  }
  if (c.record_every == 0) throw UsageError("config: record_every must be at least 1");
  return c;
}

ExperimentConfig parse_config(const std::vector<std::string>& args) {
  if (!args.empty() && !args.front().starts_with('-')) parse_command(args.front());
  CLI::App app{"Two-spin quantum Turing machine driven by substitution sequences", "qtm"};
  app.require_subcommand(1);
  RawFlags raw;

  struct Sub {
    Command command;
    const char* help;
  };
  const Sub subs[] = {
      {Command::simulate, "Evolve the network and write the Bloch trajectory"},
      {Command::pattern, "Write head (sigma2, sigma3) points and count distinct ones"},
      {Command::sensitivity, "Distance between reference and perturbed runs"},
      {Command::sequence, "Write substitution letters or the angle schedule"},
      {Command::verify, "Run the oracle-equivalence and invariant checks"},
  };
  std::vector<std::pair<Command, CLI::App*>> apps;
  std::map<std::string, std::vector<CLI::Option*>> options;
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(std::string(to_string(s.command)), s.help);
    apps.emplace_back(s.command, sub);
    auto add = [&](const std::string& name, std::string& target, const std::string& help) {
      options[name].push_back(sub->add_option(name, target, help));
    };
    add("--config", raw.config, "JSON config file; flags override its values");
    add("--schedule", raw.schedule, "regular | qf | tm | pd | cf");
    add("--alpha1", raw.alpha1, "angle for letter a (radians or <x>pi)");
    add("--alpha2", raw.alpha2, "angle for letter b (defaults to alpha1)");
    add("--reduction", raw.reduction, "cf angle reduction: mod2pi | none");
    add("--phi0", raw.phi0, "initial head rotation angle");
    add("--tape", raw.tape, "initial tape state: m1 | p1 | plus | minus");
    add("--steps", raw.steps, "number of steps (default 10000)");
    add("--record-every", raw.record_every, "record cadence (default 1)");
    add("--out", raw.out, "output path (default standard output)");
    add("--format", raw.format, "csv | json");
    if (s.command == Command::sensitivity) {
      add("--perturb", raw.perturb, "initial:<delta> or params:<d1>,<d2>");
      add("--observable", raw.observable, "distance classified: total | head | tape");
      add("--flat-threshold", raw.flat, "max D^2 below which the trace is flat");
      add("--exp-threshold", raw.exponential, "ln D^2 slope per step marking exponential growth");
      add("--saturation", raw.saturation, "D^2 level ending the fit window");
    }
    if (s.command == Command::pattern) {
      add("--tolerance", raw.tolerance, "distinct-point clustering radius");
    }
    if (s.command == Command::sequence) {
      add("--emit", raw.emit, "letters | angles");
      add("--length", raw.length, "number of letters/angles (default ceil(steps/2))");
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream o, err;
    app.exit(e, o, err);
    throw HelpRequested(o.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Command command = Command::simulate;
  for (const auto& [cmd, sub] : apps) {
    if (sub->parsed()) command = cmd;
  }
  auto given = [&](const std::string& name) {
    for (const CLI::Option* o : options[name]) {
      if (o->count() > 0) return true;
    }
    return false;
  };

  ExperimentConfig c;
  if (given("--config")) c = load_config_file(raw.config);
  c.command = command;
  if (given("--schedule")) {
    check_schedule_name(raw.schedule);
    c.schedule = raw.schedule;
  }
  auto angle_flag = [](const std::string& flag, const std::string& value) {
    try {
      return parse_angle(value);
    } catch (const UsageError& e) {
      throw UsageError(fmt::format("{}: {}", flag, e.what()));
    }
  };
  if (given("--alpha1")) {
    c.alpha1 = angle_flag("--alpha1", raw.alpha1);
  }
  if (given("--alpha2")) {
    c.alpha2 = angle_flag("--alpha2", raw.alpha2);
  } else if (!given("--config")) {
    c.alpha2 = c.alpha1;
  }
  if (given("--reduction")) c.reduction = parse_reduction(raw.reduction);
  if (given("--phi0")) c.phi0 = angle_flag("--phi0", raw.phi0);
  if (given("--tape")) c.tape = parse_tape(raw.tape);
  if (given("--steps")) c.n_steps = parse_count(raw.steps, "--steps");
  if (given("--record-every")) {
    c.record_every = parse_count(raw.record_every, "--record-every");
    if (c.record_every == 0) throw UsageError("--record-every: must be at least 1, got '0'");
  }
  if (given("--out")) c.out = raw.out;
  if (given("--format")) c.format = parse_format(raw.format);
  if (given("--perturb")) c.perturbation = parse_perturbation(raw.perturb);
  if (given("--observable")) c.observable = parse_observable(raw.observable);
  if (given("--flat-threshold")) c.thresholds.flat = parse_real(raw.flat, raw.flat);
  if (given("--exp-threshold")) c.thresholds.exponential = parse_real(raw.exponential, raw.exponential);
  if (given("--saturation")) c.thresholds.saturation = parse_real(raw.saturation, raw.saturation);
  if (given("--tolerance")) {
    c.pattern_tolerance = parse_real(raw.tolerance, raw.tolerance);
    if (!(c.pattern_tolerance > 0.0)) {
      throw UsageError(fmt::format("--tolerance: must be positive, got '{}'", raw.tolerance));
    }
  }
  if (given("--emit")) {
    if (raw.emit != "letters" && raw.emit != "angles") {
      throw UsageError(fmt::format("--emit: expected letters or angles, got '{}'", raw.emit));
    }
    c.emit = raw.emit;
  }
  if (given("--length")) c.length = parse_count(raw.length, "--length");
  return c;
}

}  // namespace qtm::cli
