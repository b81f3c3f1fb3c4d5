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

#include "qtm/export.hpp"

#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "json.hpp"

namespace qtm {

void write_table(std::ostream& os, const Table& table, Format format) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    fmt::memory_buffer line;
    for (const auto& row : table.rows) {
      line.clear();
      fmt::format_to(std::back_inserter(line), "{}", row.index);
      for (double v : row.values) fmt::format_to(std::back_inserter(line), ",{:.17g}", v);
      line.push_back('\n');
      os.write(line.data(), static_cast<std::streamsize>(line.size()));
    }
    return;
  }
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    obj[table.columns[0]] = row.index;
    for (std::size_t i = 0; i < row.values.size(); ++i) obj[table.columns[i + 1]] = row.values[i];
    out.push_back(std::move(obj));
  }
  os << out.dump(1) << '\n';
}

Table trajectory_table(std::span<const TrajectoryRecord> trajectory) {
  Table t{{"n", "s1_head", "s2_head", "s3_head", "s1_tape", "s2_tape", "s3_tape", "purity_head",
           "purity_tape"},
          {}};
  t.rows.reserve(trajectory.size());
  for (const auto& rec : trajectory) {
    const DensityMatrix2 head = reduce(rec.state, Subsystem::head);
    const DensityMatrix2 tape = reduce(rec.state, Subsystem::tape);
    const BlochVector bh = bloch(head);
    const BlochVector bt = bloch(tape);
    t.rows.push_back({rec.step,
                      {bh.sigma1, bh.sigma2, bh.sigma3, bt.sigma1, bt.sigma2, bt.sigma3,
                       purity(head), purity(tape)}});
  }
  return t;
}

Table schedule_table(const AngleSchedule& schedule, std::size_t m_max) {
  Table t{{"m", "alpha_rad"}, {}};
  t.rows.reserve(m_max);
  for (std::size_t m = 1; m <= m_max; ++m) t.rows.push_back({m, {schedule.angle(m)}});
  return t;
}

Table oracle_table(const AnalyticTrajectory& trajectory, std::size_t stride) {
  if (stride == 0) throw std::invalid_argument("stride must be at least 1");
  Table t{{"n", "c_plus", "c_minus", "a_n", "b_n", "s2_closed", "s3_closed"}, {}};
  const std::size_t last = trajectory.c_plus.size();
  for (std::size_t n = 0; n < last; ++n) {
    if (n % stride != 0 && n + 1 != last) continue;
    const PlaneBloch p =
        closed_form_bloch(trajectory.c_plus[n], trajectory.c_minus[n], trajectory.weights);
    t.rows.push_back({n,
                      {trajectory.c_plus[n], trajectory.c_minus[n], trajectory.a_n[n],
                       trajectory.b_n[n], p.sigma2, p.sigma3}});
  }
  return t;
}

Table sensitivity_table(std::span<const SensitivityRecord> trace) {
  Table t{{"n", "d2_total", "d2_head", "d2_tape", "overlap_sq"}, {}};
  t.rows.reserve(trace.size());
  for (const auto& r : trace) {
    t.rows.push_back({r.n, {r.d2_total, r.d2_head, r.d2_tape, r.overlap_sq}});
  }
  return t;
}

Table pattern_table(std::span<const PatternPoint> points) {
  Table t{{"n", "s2_head", "s3_head"}, {}};
  t.rows.reserve(points.size());
  for (const auto& p : points) t.rows.push_back({p.n, {p.sigma2, p.sigma3}});
  return t;
}

void write_sequence(std::ostream& os, const LetterSequence& seq) { os << seq.letters() << '\n'; }

}  // namespace qtm
