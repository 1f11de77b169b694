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

#include "aggregate.hpp"

#include <string>

#include "errors.hpp"
#include "parallel.hpp"

namespace spanscore {

namespace {

struct SpanTotals {
  uint64_t hyp_spans = 0;
  uint64_t gold_spans = 0;
  uint64_t hyp_chars = 0;
  uint64_t gold_chars = 0;
};

SpanTotals span_totals(const SegmentView& segments) {
  SpanTotals t;
  for (const Segment* seg : segments) {
    t.hyp_spans += seg->hypothesis.size();
    t.gold_spans += seg->gold.size();
    for (const AnnotatedSpan& s : seg->hypothesis) {
      t.hyp_chars += span_length(s.span);
    }
    for (const AnnotatedSpan& s : seg->gold) {
      t.gold_chars += span_length(s.span);
    }
  }
  return t;
}

Prf micro_prf(const SegmentView& segments, const MeasureConfig& config,
              uint64_t budget, int workers, const SpanTotals& totals) {
  const size_t n = segments.size();
  switch (config.kind) {
    case MeasureKind::kEm:
    case MeasureKind::kMp: {
      std::vector<uint64_t> matched(n, 0);
      parallel_for(n, workers, [&](size_t i) {
        const Matching m =
            config.kind == MeasureKind::kEm
                ? optimal_matching_em(*segments[i])
                : optimal_matching_mp(*segments[i], config.tau);
        matched[i] = m.pairs.size();
      });
      uint64_t total_matched = 0;
      for (uint64_t m : matched) total_matched += m;
      return prf_from_counts(total_matched, totals.hyp_spans,
                             totals.gold_spans);
    }
    case MeasureKind::kMpp:
    case MeasureKind::kApproxW25: {
      const CreditKind kind = config.kind == MeasureKind::kMpp
                                  ? CreditKind::kPerSpan
                                  : CreditKind::kChars;
      std::vector<Frontier> frontiers(n);
      parallel_for(n, workers, [&](size_t i) {
        frontiers[i] = credit_frontier(*segments[i], kind, budget);
      });
      // The pooled optimum may pick a matching that is suboptimal inside
      // one segment, so the per-segment frontiers must be combined before
      // F is maximized; anything else would not equal the concatenation.
      Frontier total{{Rational(0), Rational(0), {}}};
      for (const Frontier& f : frontiers) {
        total = combine_frontiers(total, f, budget);
      }
      const uint64_t hyp_denom = config.kind == MeasureKind::kMpp
                                     ? totals.hyp_spans
                                     : totals.hyp_chars;
      const uint64_t gold_denom = config.kind == MeasureKind::kMpp
                                      ? totals.gold_spans
                                      : totals.gold_chars;
      const CreditSolution best =
          best_on_frontier(total, hyp_denom, gold_denom);
      return Prf{best.precision, best.recall, best.f};
    }
    case MeasureKind::kW19: {
      std::vector<W19Credits> credits(n);
      parallel_for(n, workers,
                   [&](size_t i) { credits[i] = w19_credits(*segments[i]); });
      W19Credits pooled;
      for (const W19Credits& c : credits) {
        pooled.hyp_sum += c.hyp_sum;
        pooled.gold_sum += c.gold_sum;
      }
      return prf_from_sums(pooled.hyp_sum, totals.hyp_spans, pooled.gold_sum,
                           totals.gold_spans);
    }
    case MeasureKind::kW23:
    case MeasureKind::kW25: {
      const bool multiplicity = config.kind == MeasureKind::kW25;
      std::vector<CoverageCounts> counts(n);
      parallel_for(n, workers, [&](size_t i) {
        counts[i] = coverage_counts(*segments[i], multiplicity);
      });
      CoverageCounts pooled;
      for (const CoverageCounts& c : counts) {
        pooled.matched += c.matched;
        pooled.hyp_total += c.hyp_total;
        pooled.gold_total += c.gold_total;
      }
      return prf_from_counts(pooled.matched, pooled.hyp_total,
                             pooled.gold_total);
    }
  }
  throw InternalError("unreachable measure kind");
}

Prf macro_prf(const SegmentView& segments, const MeasureConfig& config,
              uint64_t budget, int workers) {
  const size_t n = segments.size();
  if (n == 0) {
    throw DataError("macro average over zero segments is undefined");
  }
  std::vector<Prf> scores(n);
  parallel_for(n, workers, [&](size_t i) {
    scores[i] = score_segment(*segments[i], config, budget);
  });
  Prf mean;
  for (const Prf& s : scores) {
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.f += s.f;
  }
  mean.precision /= n;
  mean.recall /= n;
  mean.f /= n;
  return mean;
}

}  // namespace

const char* averaging_name(Averaging averaging) {
  return averaging == Averaging::kMicro ? "micro" : "macro";
}

Averaging parse_averaging(std::string_view token) {
  if (token == "micro") return Averaging::kMicro;
  if (token == "macro") return Averaging::kMacro;
  throw ConfigError("unknown averaging \"" + std::string(token) +
                    "\" (expected micro or macro)");
}

CorpusScore score_corpus(const SegmentView& segments,
                         const MeasureConfig& config, Averaging averaging,
                         uint64_t budget, int workers) {
  const SpanTotals totals = span_totals(segments);
  CorpusScore out;
  out.n_segments = segments.size();
  out.n_hyp_spans = totals.hyp_spans;
  out.n_gold_spans = totals.gold_spans;
  out.prf = averaging == Averaging::kMicro
                ? micro_prf(segments, config, budget, workers, totals)
                : macro_prf(segments, config, budget, workers);
  return out;
}

Segment concatenate(const SegmentView& segments) {
  Segment out;
  out.id = "concat";
  uint64_t offset = 0;
  for (const Segment* seg : segments) {
    out.text += seg->text;
    for (const AnnotatedSpan& s : seg->hypothesis) {
      AnnotatedSpan shifted = s;
      shifted.span.start = static_cast<uint32_t>(s.span.start + offset);
      shifted.span.end = static_cast<uint32_t>(s.span.end + offset);
      out.hypothesis.push_back(std::move(shifted));
    }
    for (const AnnotatedSpan& s : seg->gold) {
      AnnotatedSpan shifted = s;
      shifted.span.start = static_cast<uint32_t>(s.span.start + offset);
      shifted.span.end = static_cast<uint32_t>(s.span.end + offset);
      out.gold.push_back(std::move(shifted));
    }
    offset += seg->text.size();
    if (offset > UINT32_MAX) {
      throw DataError("concatenated text exceeds the supported length");
    }
  }
  return out;
}

Segment concatenate(const Dataset& dataset) {
  SegmentView view;
  view.reserve(dataset.segments.size());
  for (const Segment& seg : dataset.segments) view.push_back(&seg);
  return concatenate(view);
}

}  // namespace spanscore
