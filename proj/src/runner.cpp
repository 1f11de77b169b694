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

#include "runner.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "errors.hpp"
#include "fixtures.hpp"
#include "matching.hpp"

namespace spanscore {

namespace {

std::string system_label(const Segment& segment) {
  return segment.system.empty() ? "default" : segment.system;
}

std::string group_label(const Segment& segment, GroupBy group_by) {
  switch (group_by) {
    case GroupBy::kNone:
      return "ALL";
    case GroupBy::kLangPair:
      return segment.lang_pair.empty() ? "unknown" : segment.lang_pair;
    case GroupBy::kSystem:
      return system_label(segment);
  }
  throw InternalError("unreachable grouping");
}

void check_config(const RunConfig& config) {
  if (config.measures.empty()) {
    throw ConfigError("at least one measure is required");
  }
}

std::vector<Averaging> effective_averaging(const RunConfig& config) {
  if (config.averaging.empty()) return {Averaging::kMicro};
  return config.averaging;
}

// system label -> group label -> segments, all orders deterministic
using Partition = std::map<std::string, std::map<std::string, SegmentView>>;

Partition partition(const Dataset& dataset, GroupBy group_by) {
  Partition out;
  for (const Segment& segment : dataset.segments) {
    out[system_label(segment)][group_label(segment, group_by)].push_back(
        &segment);
  }
  return out;
}

ReportRow make_row(std::string system, const MeasureConfig& measure,
                   Averaging averaging, std::string group,
                   const CorpusScore& score) {
  ReportRow row;
  row.system = std::move(system);
  row.measure = measure;
  row.averaging = averaging;
  row.group = std::move(group);
  row.prf = score.prf;
  row.n_segments = score.n_segments;
  row.n_hyp_spans = score.n_hyp_spans;
  row.n_gold_spans = score.n_gold_spans;
  return row;
}

std::vector<ReportRow> score_rows(const Dataset& dataset,
                                  const RunConfig& config) {
  if (dataset.segments.empty()) {
    throw DataError("dataset contains no segments");
  }
  const Partition systems = partition(dataset, config.group_by);
  std::vector<ReportRow> rows;
  for (const auto& [system, groups] : systems) {
    SegmentView pooled;
    for (const auto& [group, view] : groups) {
      pooled.insert(pooled.end(), view.begin(), view.end());
    }
    for (const MeasureConfig& measure : config.measures) {
      for (const Averaging averaging : effective_averaging(config)) {
        if (config.group_by == GroupBy::kNone) {
          rows.push_back(make_row(
              system, measure, averaging, "ALL",
              score_corpus(pooled, measure, averaging, config.budget,
                           config.workers)));
          continue;
        }
        CorpusScore summary;
        std::vector<CorpusScore> per_group;
        per_group.reserve(groups.size());
        for (const auto& [group, view] : groups) {
          per_group.push_back(score_corpus(view, measure, averaging,
                                           config.budget, config.workers));
          rows.push_back(
              make_row(system, measure, averaging, group, per_group.back()));
        }
        if (config.pool_groups) {
          summary = score_corpus(pooled, measure, averaging, config.budget,
                                 config.workers);
        } else {
          // The summary row averages the groups with equal weight, the same
          // convention as macro averaging over segments.
          for (const CorpusScore& g : per_group) {
            summary.prf.precision += g.prf.precision;
            summary.prf.recall += g.prf.recall;
            summary.prf.f += g.prf.f;
            summary.n_segments += g.n_segments;
            summary.n_hyp_spans += g.n_hyp_spans;
            summary.n_gold_spans += g.n_gold_spans;
          }
          const auto n = static_cast<int64_t>(per_group.size());
          summary.prf.precision /= n;
          summary.prf.recall /= n;
          summary.prf.f /= n;
        }
        rows.push_back(make_row(system, measure, averaging, "ALL", summary));
      }
    }
  }
  return rows;
}

double parse_grid_value(const std::string& token,
                        PerturbationSpec::Kind kind) {
  if (kind == PerturbationSpec::Kind::kDrop) {
    const std::string copy(token);
    char* end = nullptr;
    const double v = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size() || v < 0.0 ||
        v > 1.0) {
      throw ConfigError("sweep value \"" + token +
                        "\" is not a probability in [0, 1]");
    }
    return v;
  }
  uint32_t v = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ConfigError("sweep value \"" + token +
                      "\" is not a non-negative integer");
  }
  return static_cast<double>(v);
}

}  // namespace

GroupBy parse_group_by(std::string_view token) {
  if (token == "none") return GroupBy::kNone;
  if (token == "lang_pair") return GroupBy::kLangPair;
  if (token == "system") return GroupBy::kSystem;
  throw ConfigError("unknown grouping \"" + std::string(token) +
                    "\" (expected none, lang_pair, or system)");
}

std::vector<ReportRow> cmd_score(const Dataset& dataset,
                                 const RunConfig& config) {
  check_config(config);
  if (!config.perturb) return score_rows(dataset, config);
  return score_rows(apply_perturbation(dataset, *config.perturb, 0), config);
}

std::vector<ReportRow> cmd_sweep(const Dataset& dataset,
                                 const RunConfig& config) {
  check_config(config);
  if (!config.perturb) {
    throw ConfigError("sweep requires a perturbation (--perturb)");
  }
  if (config.sweep_grid.empty()) {
    throw ConfigError("sweep requires at least one grid value (--sweep)");
  }
  std::vector<ReportRow> out;
  for (const std::string& token : config.sweep_grid) {
    PerturbationSpec point = *config.perturb;
    const double value = parse_grid_value(token, point.kind);
    if (point.kind == PerturbationSpec::Kind::kDrop) {
      point.probability = value;
    } else {
      point.amount = static_cast<uint32_t>(value);
    }
    const uint32_t reps = point.kind == PerturbationSpec::Kind::kDrop
                              ? point.repetitions
                              : 1;

    std::vector<std::vector<ReportRow>> reps_rows;
    reps_rows.reserve(reps);
    for (uint32_t rep = 0; rep < reps; ++rep) {
      reps_rows.push_back(
          score_rows(apply_perturbation(dataset, point, rep), config));
    }

    const std::vector<ReportRow>& first = reps_rows.front();
    for (size_t i = 0; i < first.size(); ++i) {
      ReportRow row = first[i];
      SweepStats stats;
      stats.param = token;
      stats.param_value = value;
      Prf mean;
      stats.p_min = stats.p_max = first[i].prf.precision;
      stats.r_min = stats.r_max = first[i].prf.recall;
      stats.f_min = stats.f_max = first[i].prf.f;
      for (const auto& rep_rows : reps_rows) {
        if (rep_rows.size() != first.size() ||
            rep_rows[i].system != first[i].system ||
            rep_rows[i].group != first[i].group) {
          throw InternalError("sweep repetitions disagree on row layout");
        }
        const Prf& prf = rep_rows[i].prf;
        mean.precision += prf.precision;
        mean.recall += prf.recall;
        mean.f += prf.f;
        stats.p_min = std::min(stats.p_min, prf.precision);
        stats.p_max = std::max(stats.p_max, prf.precision);
        stats.r_min = std::min(stats.r_min, prf.recall);
        stats.r_max = std::max(stats.r_max, prf.recall);
        stats.f_min = std::min(stats.f_min, prf.f);
        stats.f_max = std::max(stats.f_max, prf.f);
      }
      mean.precision /= reps;
      mean.recall /= reps;
      mean.f /= reps;
      row.prf = mean;
      row.sweep = std::move(stats);
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<RankRow> cmd_rank(const Dataset& dataset, const RunConfig& config) {
  check_config(config);
  RunConfig pooled_config = config;
  pooled_config.group_by = GroupBy::kNone;
  const std::vector<ReportRow> rows =
      config.perturb
          ? score_rows(apply_perturbation(dataset, *config.perturb, 0),
                       pooled_config)
          : score_rows(dataset, pooled_config);
  std::vector<std::string> systems;
  for (const ReportRow& row : rows) {
    if (std::find(systems.begin(), systems.end(), row.system) ==
        systems.end()) {
      systems.push_back(row.system);
    }
  }
  if (systems.size() < 2) {
    throw DataError("ranking needs at least two systems, found " +
                    std::to_string(systems.size()));
  }
  return rank_systems(rows);
}

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> results;
  const auto check_prf = [&](const std::string& name, const Prf& got,
                             const Rational& p, const Rational& r,
                             const Rational& f) {
    CheckResult result{name, true, ""};
    if (got.precision != p || got.recall != r || got.f != f) {
      result.passed = false;
      result.detail = "expected p=" + format_decimal(p, 6) +
                      " r=" + format_decimal(r, 6) +
                      " f=" + format_decimal(f, 6) +
                      ", got p=" + format_decimal(got.precision, 6) +
                      " r=" + format_decimal(got.recall, 6) +
                      " f=" + format_decimal(got.f, 6);
    }
    results.push_back(std::move(result));
  };

  const Segment basic = example_segment_basic();
  const Segment split = example_segment_split_gold();
  check_prf("basic/em", score_em(basic), Rational(1, 2), Rational(1, 2),
            Rational(1, 2));
  check_prf("basic/mp:1", score_mp(basic, 1), Rational(1), Rational(1),
            Rational(1));
  check_prf("basic/mpp", score_mpp(basic), Rational(7, 9), Rational(1),
            Rational(7, 8));
  check_prf("basic/approx-w25", score_approx_w25(basic), Rational(2, 3),
            Rational(1), Rational(4, 5));
  check_prf("basic/w23", score_w23(basic), Rational(2, 3), Rational(1),
            Rational(4, 5));
  check_prf("split-gold/em", score_em(split), Rational(1, 2), Rational(1, 3),
            Rational(2, 5));
  check_prf("split-gold/mpp", score_mpp(split), Rational(7, 9), Rational(2, 3),
            Rational(28, 39));
  check_prf("split-gold/w19", score_w19(split), Rational(7, 9), Rational(1),
            Rational(7, 8));
  check_prf("split-gold/w25", score_w25(split), Rational(11, 12), Rational(1),
            Rational(22, 23));

  // Solver against the exhaustive oracle on pseudo-random segments.
  {
    const auto segments = random_segments(0xC0FFEE, 200, 60, 5, 12);
    size_t compared = 0, mismatched = 0;
    std::string first_bad;
    const auto compare = [&](const Segment& seg, const std::string& label,
                             const Prf& fast, const OracleResult& oracle) {
      ++compared;
      if (fast.precision != oracle.precision || fast.recall != oracle.recall ||
          fast.f != oracle.f) {
        ++mismatched;
        if (first_bad.empty()) first_bad = seg.id + " " + label;
      }
    };
    for (const Segment& seg : segments) {
      if (candidate_pairs(seg, PairRule::kOverlap, 1).size() >
          kOracleCandidateLimit) {
        continue;
      }
      compare(seg, "em", score_em(seg),
              brute_force_matching(seg, PairRule::kExact, 1,
                                   PairScorer::kCounts));
      compare(seg, "mp:1", score_mp(seg, 1),
              brute_force_matching(seg, PairRule::kOverlap, 1,
                                   PairScorer::kCounts));
      compare(seg, "mp:3", score_mp(seg, 3),
              brute_force_matching(seg, PairRule::kOverlap, 3,
                                   PairScorer::kCounts));
      compare(seg, "mpp", score_mpp(seg),
              brute_force_matching(seg, PairRule::kOverlap, 1,
                                   PairScorer::kPerSpanCredit));
      compare(seg, "approx-w25", score_approx_w25(seg),
              brute_force_matching(seg, PairRule::kOverlap, 1,
                                   PairScorer::kCharOverlap));
    }
    CheckResult result{"solver-vs-oracle", mismatched == 0, ""};
    if (mismatched > 0) {
      result.detail = std::to_string(mismatched) + " of " +
                      std::to_string(compared) +
                      " comparisons disagree (first: " + first_bad + ")";
    }
    results.push_back(std::move(result));
  }

  // Micro averaging must equal scoring the concatenated dataset.
  {
    const auto segments = random_segments(0xABCDEF, 20, 40, 3, 10);
    Dataset ds;
    ds.segments = segments;
    const Segment merged = concatenate(ds);
    SegmentView view;
    for (const Segment& seg : ds.segments) view.push_back(&seg);
    size_t bad = 0;
    std::string first_bad;
    for (const char* token :
         {"em", "mp:1", "mp:3", "mpp", "approx-w25", "w19", "w23", "w25"}) {
      const MeasureConfig measure = parse_measure(token);
      const CorpusScore micro =
          score_corpus(view, measure, Averaging::kMicro);
      const Prf whole = score_segment(merged, measure);
      if (micro.prf != whole) {
        ++bad;
        if (first_bad.empty()) first_bad = token;
      }
    }
    CheckResult result{"micro-vs-concatenation", bad == 0, ""};
    if (bad > 0) {
      result.detail = std::to_string(bad) + " measures disagree (first: " +
                      first_bad + ")";
    }
    results.push_back(std::move(result));
  }

  return results;
}

}  // namespace spanscore
