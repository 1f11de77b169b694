// Copyright 2026 The spanscore Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SPANSCORE_REPORT_HPP
#define SPANSCORE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aggregate.hpp"
#include "measures.hpp"
#include "rational.hpp"

namespace spanscore {

// Range statistics a sweep attaches to each row: the perturbation level and
// the spread of each score over the seeded repetitions (the row's own
// P/R/F hold the mean).
struct SweepStats {
  std::string param;  // grid value as written, e.g. "0.25" or "4"
  double param_value = 0.0;
  Rational p_min{0}, p_max{0};
  Rational r_min{0}, r_max{0};
  Rational f_min{0}, f_max{0};
};

struct ReportRow {
  std::string system;
  MeasureConfig measure;
  Averaging averaging = Averaging::kMicro;
  std::string group;  // "ALL" when ungrouped
  Prf prf;
  uint64_t n_segments = 0;
  uint64_t n_hyp_spans = 0;
  uint64_t n_gold_spans = 0;
  std::optional<SweepStats> sweep;
};

struct RankRow {
  MeasureConfig measure;
  Averaging averaging = Averaging::kMicro;
  uint32_t rank = 0;
  std::string system;
  Prf prf;
};

enum class ReportFormat { kCsv, kTsv, kTable, kSvg };

ReportFormat parse_format(std::string_view token);

// Renders rows sorted by (group, measure, system, tau, averaging, level).
// Columns are fixed:
//   system,measure,tau,averaging,group,precision,recall,f,
//   n_segments,n_hyp_spans,n_gold_spans
// with param,p_min,p_max,r_min,r_max,f_min,f_max appended when any row
// carries sweep statistics. Scores are printed with `digits` decimals,
// rounded half-to-even. kSvg draws F over the sweep parameter and requires
// sweep rows.
std::string emit_report(std::vector<ReportRow> rows, ReportFormat format,
                        int digits);

// Leaderboards per (measure, averaging): systems ordered by F, then
// precision, then name; ranks start at 1. Requires at least two systems.
std::vector<RankRow> rank_systems(const std::vector<ReportRow>& rows);

std::string emit_ranking(std::vector<RankRow> rows, ReportFormat format,
                         int digits);

}  // namespace spanscore

#endif  // SPANSCORE_REPORT_HPP
