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

#include "measures.hpp"

#include <algorithm>
#include <charconv>

#include "errors.hpp"

namespace spanscore {

const char* measure_name(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::kEm:
      return "em";
    case MeasureKind::kMp:
      return "mp";
    case MeasureKind::kMpp:
      return "mpp";
    case MeasureKind::kApproxW25:
      return "approx-w25";
    case MeasureKind::kW19:
      return "w19";
    case MeasureKind::kW23:
      return "w23";
    case MeasureKind::kW25:
      return "w25";
  }
  throw InternalError("unreachable measure kind");
}

MeasureConfig parse_measure(std::string_view token) {
  MeasureConfig config;
  if (token == "em") {
    config.kind = MeasureKind::kEm;
  } else if (token == "mp" || token.rfind("mp:", 0) == 0) {
    config.kind = MeasureKind::kMp;
    if (token.size() > 2) {
      const std::string_view arg = token.substr(3);
      uint32_t tau = 0;
      const auto [ptr, ec] =
          std::from_chars(arg.data(), arg.data() + arg.size(), tau);
      if (ec != std::errc() || ptr != arg.data() + arg.size() || tau < 1) {
        throw ConfigError("invalid overlap threshold in measure \"" +
                          std::string(token) +
                          "\" (expected mp:<integer >= 1>)");
      }
      config.tau = tau;
    }
  } else if (token == "mpp") {
    config.kind = MeasureKind::kMpp;
  } else if (token == "approx-w25") {
    config.kind = MeasureKind::kApproxW25;
  } else if (token == "w19") {
    config.kind = MeasureKind::kW19;
  } else if (token == "w23") {
    config.kind = MeasureKind::kW23;
  } else if (token == "w25") {
    config.kind = MeasureKind::kW25;
  } else {
    throw ConfigError("unknown measure \"" + std::string(token) +
                      "\" (expected em, mp[:tau], mpp, approx-w25, w19, "
                      "w23, or w25)");
  }
  return config;
}

Rational f_score(const Rational& precision, const Rational& recall) {
  const Rational sum = precision + recall;
  if (sum == 0) return Rational(0);
  return 2 * precision * recall / sum;
}

Prf prf_from_counts(uint64_t matched, uint64_t hyp_total,
                    uint64_t gold_total) {
  if (matched > hyp_total || matched > gold_total) {
    throw InternalError("matched count exceeds a side total");
  }
  Prf out;
  out.precision = hyp_total ? Rational(matched, hyp_total) : Rational(1);
  out.recall = gold_total ? Rational(matched, gold_total) : Rational(1);
  out.f = f_score(out.precision, out.recall);
  return out;
}

Prf prf_from_sums(const Rational& p_num, uint64_t p_den, const Rational& r_num,
                  uint64_t r_den) {
  if (p_num < 0 || p_num > p_den || r_num < 0 || r_num > r_den) {
    throw InternalError("credit sum outside [0, total]");
  }
  Prf out;
  out.precision = p_den ? p_num / p_den : Rational(1);
  out.recall = r_den ? r_num / r_den : Rational(1);
  out.f = f_score(out.precision, out.recall);
  return out;
}

Prf score_em(const Segment& segment) {
  const Matching m = optimal_matching_em(segment);
  return prf_from_counts(m.pairs.size(), segment.hypothesis.size(),
                         segment.gold.size());
}

Prf score_mp(const Segment& segment, uint32_t tau) {
  const Matching m = optimal_matching_mp(segment, tau);
  return prf_from_counts(m.pairs.size(), segment.hypothesis.size(),
                         segment.gold.size());
}

Prf score_mpp(const Segment& segment, uint64_t budget) {
  const CreditSolution s = optimal_matching_mpp(segment, budget);
  return Prf{s.precision, s.recall, s.f};
}

Prf score_approx_w25(const Segment& segment, uint64_t budget) {
  const CreditSolution s = optimal_matching_chars(segment, budget);
  return Prf{s.precision, s.recall, s.f};
}

W19Credits w19_credits(const Segment& segment) {
  W19Credits out;
  for (const AnnotatedSpan& hyp : segment.hypothesis) {
    uint32_t best_overlap = 0;
    Rational best_ratio(0);
    for (const AnnotatedSpan& gold : segment.gold) {
      const uint32_t ov = overlap(hyp.span, gold.span);
      if (ov == 0) continue;
      const Rational ratio(ov, union_length(hyp.span, gold.span));
      if (ratio > best_ratio) {  // ties keep the earliest gold span
        best_ratio = ratio;
        best_overlap = ov;
      }
    }
    out.hyp_sum += Rational(best_overlap, span_length(hyp.span));
  }
  for (const AnnotatedSpan& gold : segment.gold) {
    uint32_t best_overlap = 0;
    Rational best_ratio(0);
    for (const AnnotatedSpan& hyp : segment.hypothesis) {
      const uint32_t ov = overlap(hyp.span, gold.span);
      if (ov == 0) continue;
      const Rational ratio(ov, union_length(hyp.span, gold.span));
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best_overlap = ov;
      }
    }
    out.gold_sum += Rational(best_overlap, span_length(gold.span));
  }
  return out;
}

Prf score_w19(const Segment& segment) {
  const W19Credits credits = w19_credits(segment);
  return prf_from_sums(credits.hyp_sum, segment.hypothesis.size(),
                       credits.gold_sum, segment.gold.size());
}

CoverageCounts coverage_counts(const Segment& segment, bool multiplicity) {
  const size_t n = segment.text.size();
  // Difference arrays turn span stabbing counts into two linear sweeps.
  std::vector<int64_t> hyp_delta(n + 1, 0), gold_delta(n + 1, 0);
  for (const AnnotatedSpan& s : segment.hypothesis) {
    if (s.span.end > n) throw InternalError("span outside validated text");
    ++hyp_delta[s.span.start];
    --hyp_delta[s.span.end];
  }
  for (const AnnotatedSpan& s : segment.gold) {
    if (s.span.end > n) throw InternalError("span outside validated text");
    ++gold_delta[s.span.start];
    --gold_delta[s.span.end];
  }
  CoverageCounts out;
  int64_t hyp_count = 0, gold_count = 0;
  for (size_t i = 0; i < n; ++i) {
    hyp_count += hyp_delta[i];
    gold_count += gold_delta[i];
    int64_t h = hyp_count, g = gold_count;
    if (!multiplicity) {
      h = h > 0 ? 1 : 0;
      g = g > 0 ? 1 : 0;
    }
    out.hyp_total += static_cast<uint64_t>(h);
    out.gold_total += static_cast<uint64_t>(g);
    out.matched += static_cast<uint64_t>(h < g ? h : g);
  }
  return out;
}

Prf score_w23(const Segment& segment) {
  const CoverageCounts cov = coverage_counts(segment, false);
  return prf_from_counts(cov.matched, cov.hyp_total, cov.gold_total);
}

Prf score_w25(const Segment& segment) {
  const CoverageCounts cov = coverage_counts(segment, true);
  return prf_from_counts(cov.matched, cov.hyp_total, cov.gold_total);
}

Prf score_segment(const Segment& segment, const MeasureConfig& config,
                  uint64_t budget) {
  switch (config.kind) {
    case MeasureKind::kEm:
      return score_em(segment);
    case MeasureKind::kMp:
      return score_mp(segment, config.tau);
    case MeasureKind::kMpp:
      return score_mpp(segment, budget);
    case MeasureKind::kApproxW25:
      return score_approx_w25(segment, budget);
    case MeasureKind::kW19:
      return score_w19(segment);
    case MeasureKind::kW23:
      return score_w23(segment);
    case MeasureKind::kW25:
      return score_w25(segment);
  }
  throw InternalError("unreachable measure kind");
}

}  // namespace spanscore
