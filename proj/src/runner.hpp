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

#ifndef SPANSCORE_RUNNER_HPP
#define SPANSCORE_RUNNER_HPP

#include <optional>
#include <string>
#include <vector>

#include "aggregate.hpp"
#include "core.hpp"
#include "report.hpp"
#include "sentinels.hpp"

namespace spanscore {

enum class GroupBy { kNone, kLangPair, kSystem };

GroupBy parse_group_by(std::string_view token);

struct RunConfig {
  std::vector<MeasureConfig> measures;
  std::vector<Averaging> averaging;  // empty means {micro}
  GroupBy group_by = GroupBy::kNone;
  bool pool_groups = false;
  std::optional<PerturbationSpec> perturb;
  std::vector<std::string> sweep_grid;  // values as written on the grid
  uint64_t budget = kDefaultBudget;
  int workers = 1;
};

// Scores every system in the dataset (segments without a system are
// reported as "default", segments without a lang_pair group as "unknown").
// With grouping, each group gets a row and an "ALL" summary row that either
// averages the groups or, with pool_groups, pools their segments. Any
// configured perturbation is applied first (repetition 0).
std::vector<ReportRow> cmd_score(const Dataset& dataset,
                                 const RunConfig& config);

// Scores the dataset once per grid value of the configured perturbation.
// "drop" runs all configured repetitions per value and reports their mean
// and range; span counts come from the first repetition.
std::vector<ReportRow> cmd_sweep(const Dataset& dataset,
                                 const RunConfig& config);

// Leaderboard over all systems in the dataset; needs at least two.
std::vector<RankRow> cmd_rank(const Dataset& dataset, const RunConfig& config);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // non-empty on failure
};

// Fixture scores with hand-checked values, solver-vs-oracle comparisons on
// pseudo-random segments, and micro-vs-concatenation identities.
std::vector<CheckResult> run_selfcheck();

}  // namespace spanscore

#endif  // SPANSCORE_RUNNER_HPP
