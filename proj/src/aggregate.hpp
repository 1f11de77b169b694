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

#ifndef SPANSCORE_AGGREGATE_HPP
#define SPANSCORE_AGGREGATE_HPP

#include <string_view>
#include <vector>

#include "core.hpp"
#include "measures.hpp"

namespace spanscore {

enum class Averaging { kMicro, kMacro };

const char* averaging_name(Averaging averaging);
Averaging parse_averaging(std::string_view token);

using SegmentView = std::vector<const Segment*>;

struct CorpusScore {
  Prf prf;
  uint64_t n_segments = 0;
  uint64_t n_hyp_spans = 0;
  uint64_t n_gold_spans = 0;
};

// Corpus-level score of a collection of segments.
//
// Micro pools the measure's own ingredients before any ratio is formed:
// matched-pair counts for em/mp, credit frontiers (combined exactly, then
// optimized against the pooled denominators) for mpp/approx-w25, span
// credits for w19, and coverage tallies for w23/w25. The result is identical
// to scoring the concatenation of all segments as one segment.
//
// Macro averages the per-segment precision, recall, and F arithmetically;
// macro F is the mean of F values, not the harmonic mean of macro P and R.
// Macro over zero segments is an error; micro over zero segments follows
// the empty-set conventions and scores (1, 1, 1).
CorpusScore score_corpus(const SegmentView& segments,
                         const MeasureConfig& config, Averaging averaging,
                         uint64_t budget = kDefaultBudget, int workers = 1);

// Joins segments into one: texts appended in order, spans shifted by the
// cumulative text length. Serves as the reference point for micro averaging.
Segment concatenate(const SegmentView& segments);
Segment concatenate(const Dataset& dataset);

}  // namespace spanscore

#endif  // SPANSCORE_AGGREGATE_HPP
