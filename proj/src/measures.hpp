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

#ifndef SPANSCORE_MEASURES_HPP
#define SPANSCORE_MEASURES_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "core.hpp"
#include "matching.hpp"
#include "rational.hpp"

namespace spanscore {

// The supported span-comparison regimes, from strictest to most forgiving:
//   em         exact offsets, one-to-one
//   mp         overlap >= tau characters, one-to-one, full credit
//   mpp        one-to-one with per-span partial credit, F-optimal matching
//   approx-w25 character-overlap credit under an F-optimal one-to-one
//              matching (a one-to-one approximation of w25)
//   w19        per-span best match by Jaccard overlap, many-to-one allowed
//   w23        binary character coverage
//   w25        coverage with multiplicity
enum class MeasureKind { kEm, kMp, kMpp, kApproxW25, kW19, kW23, kW25 };

struct MeasureConfig {
  MeasureKind kind = MeasureKind::kMpp;
  uint32_t tau = 1;  // used by kMp only

  friend bool operator==(const MeasureConfig&, const MeasureConfig&) = default;
};

const char* measure_name(MeasureKind kind);

// Parses "em", "mp", "mp:<tau>", "mpp", "approx-w25", "w19", "w23", "w25".
MeasureConfig parse_measure(std::string_view token);

struct Prf {
  Rational precision{0};
  Rational recall{0};
  Rational f{0};

  friend bool operator==(const Prf&, const Prf&) = default;
};

// Empty-set conventions shared by every measure: precision is 1 when there
// is nothing hypothesized, recall is 1 when there is nothing to find, and F
// is 0 when P + R is 0 (harmonic mean otherwise). A system that is silent on
// a segment without gold errors is thus perfect, and silent on a segment
// with gold errors scores F = 0, never NaN.
Rational f_score(const Rational& precision, const Rational& recall);
Prf prf_from_counts(uint64_t matched, uint64_t hyp_total, uint64_t gold_total);
Prf prf_from_sums(const Rational& p_num, uint64_t p_den, const Rational& r_num,
                  uint64_t r_den);

Prf score_em(const Segment& segment);
Prf score_mp(const Segment& segment, uint32_t tau);
Prf score_mpp(const Segment& segment, uint64_t budget = kDefaultBudget);
Prf score_approx_w25(const Segment& segment, uint64_t budget = kDefaultBudget);
Prf score_w19(const Segment& segment);
Prf score_w23(const Segment& segment);
Prf score_w25(const Segment& segment);

Prf score_segment(const Segment& segment, const MeasureConfig& config,
                  uint64_t budget = kDefaultBudget);

// Building blocks reused by corpus-level pooling.

// Per-span best-match credits: each hypothesis span is credited against the
// gold span maximizing overlap/union (ties to the lowest index, zero overlap
// scores zero), and symmetrically for gold spans. Several spans may share
// one best match.
struct W19Credits {
  Rational hyp_sum{0};
  Rational gold_sum{0};
};
W19Credits w19_credits(const Segment& segment);

// Character coverage tallies. Binary mode counts each covered position
// once per side; multiplicity mode counts how many spans cover it and
// matches min(hyp count, gold count) per position.
struct CoverageCounts {
  uint64_t matched = 0;
  uint64_t hyp_total = 0;
  uint64_t gold_total = 0;
};
CoverageCounts coverage_counts(const Segment& segment, bool multiplicity);

}  // namespace spanscore

#endif  // SPANSCORE_MEASURES_HPP
