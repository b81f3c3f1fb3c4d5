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

// Tabular artifacts. Every table has an integer index column followed by
// real columns, written either as CSV (17 significant digits) or as a JSON
// array holding one object per row with the CSV column names as keys.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "qtm/analytic.hpp"
#include "qtm/pattern.hpp"
#include "qtm/quantum_core.hpp"
#include "qtm/sensitivity.hpp"
#include "qtm/substitution.hpp"

namespace qtm {

enum class Format { csv, json };

struct Table {
  std::vector<std::string> columns;  // columns[0] names the index
  struct Row {
    std::size_t index = 0;
    std::vector<double> values;
  };
  std::vector<Row> rows;
};

void write_table(std::ostream& os, const Table& table, Format format);

/// n,s1_head,s2_head,s3_head,s1_tape,s2_tape,s3_tape,purity_head,purity_tape
Table trajectory_table(std::span<const TrajectoryRecord> trajectory);
/// m,alpha_rad for m = 1..m_max
Table schedule_table(const AngleSchedule& schedule, std::size_t m_max);
/// n,c_plus,c_minus,a_n,b_n,s2_closed,s3_closed, every `stride`-th step
Table oracle_table(const AnalyticTrajectory& trajectory, std::size_t stride = 1);
/// n,d2_total,d2_head,d2_tape,overlap_sq
Table sensitivity_table(std::span<const SensitivityRecord> trace);
/// n,s2_head,s3_head
Table pattern_table(std::span<const PatternPoint> points);

/// One letter per character followed by a newline.
void write_sequence(std::ostream& os, const LetterSequence& seq);

}  // namespace qtm
