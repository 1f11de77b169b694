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

#include <catch2/catch.hpp>

#include "errors.hpp"
#include "fixtures.hpp"
#include "measures.hpp"
#include "test_util.hpp"

using namespace spanscore;
using testutil::at;
using testutil::make_segment;
using testutil::prf;

namespace {

const std::string kText = "0123456789abcdefghijklmnopqrstuvwxyz";

}  // namespace

TEST_CASE("measure tokens round-trip through the parser") {
  CHECK(parse_measure("em") == MeasureConfig{MeasureKind::kEm, 1});
  CHECK(parse_measure("mp") == MeasureConfig{MeasureKind::kMp, 1});
  CHECK(parse_measure("mp:1") == MeasureConfig{MeasureKind::kMp, 1});
  CHECK(parse_measure("mp:7") == MeasureConfig{MeasureKind::kMp, 7});
  CHECK(parse_measure("mpp") == MeasureConfig{MeasureKind::kMpp, 1});
  CHECK(parse_measure("approx-w25") ==
        MeasureConfig{MeasureKind::kApproxW25, 1});
  CHECK(parse_measure("w19") == MeasureConfig{MeasureKind::kW19, 1});
  CHECK(parse_measure("w23") == MeasureConfig{MeasureKind::kW23, 1});
  CHECK(parse_measure("w25") == MeasureConfig{MeasureKind::kW25, 1});

  CHECK_THROWS_AS(parse_measure(""), ConfigError);
  CHECK_THROWS_AS(parse_measure("f1"), ConfigError);
  CHECK_THROWS_AS(parse_measure("MP"), ConfigError);
  CHECK_THROWS_AS(parse_measure("mp:"), ConfigError);
  CHECK_THROWS_AS(parse_measure("mp:0"), ConfigError);
  CHECK_THROWS_AS(parse_measure("mp:-2"), ConfigError);
  CHECK_THROWS_AS(parse_measure("mp:2x"), ConfigError);
  CHECK_THROWS_AS(parse_measure("mp:1.5"), ConfigError);

  for (MeasureKind kind :
       {MeasureKind::kEm, MeasureKind::kMp, MeasureKind::kMpp,
        MeasureKind::kApproxW25, MeasureKind::kW19, MeasureKind::kW23,
        MeasureKind::kW25}) {
    CHECK(parse_measure(measure_name(kind)).kind == kind);
  }
}

TEST_CASE("precision/recall conventions on empty sides") {
  CHECK(prf_from_counts(0, 0, 0) == prf(1, 1, 1, 1, 1, 1));
  CHECK(prf_from_counts(0, 3, 0) == prf(0, 1, 1, 1, 0, 1));
  CHECK(prf_from_counts(0, 0, 3) == prf(1, 1, 0, 1, 0, 1));
  CHECK(prf_from_counts(0, 3, 3) == prf(0, 1, 0, 1, 0, 1));
  CHECK(prf_from_counts(1, 2, 4) == prf(1, 2, 1, 4, 1, 3));
  CHECK_THROWS_AS(prf_from_counts(4, 3, 5), InternalError);
  CHECK_THROWS_AS(prf_from_counts(4, 5, 3), InternalError);

  CHECK(prf_from_sums(Rational(0), 0, Rational(0), 0) ==
        prf(1, 1, 1, 1, 1, 1));
  CHECK(prf_from_sums(Rational(1, 2), 2, Rational(3, 2), 3) ==
        prf(1, 4, 1, 2, 1, 3));
  CHECK_THROWS_AS(prf_from_sums(Rational(3), 2, Rational(0), 1),
                  InternalError);
  CHECK_THROWS_AS(prf_from_sums(Rational(-1, 2), 2, Rational(0), 1),
                  InternalError);
}

TEST_CASE("reference segment: partially and exactly matched spans") {
  const Segment seg = example_segment_basic();

  CHECK(score_em(seg) == prf(1, 2, 1, 2, 1, 2));
  CHECK(score_mp(seg, 1) == prf(1, 1, 1, 1, 1, 1));
  CHECK(score_mp(seg, 3) == prf(1, 1, 1, 1, 1, 1));   // overlaps are 5 and 3
  CHECK(score_mp(seg, 4) == prf(1, 2, 1, 2, 1, 2));   // only the 5-char one
  CHECK(score_mp(seg, 6) == prf(0, 1, 0, 1, 0, 1));
  CHECK(score_mpp(seg) == prf(7, 9, 1, 1, 7, 8));
  CHECK(score_approx_w25(seg) == prf(2, 3, 1, 1, 4, 5));
  CHECK(score_w19(seg) == prf(7, 9, 1, 1, 7, 8));
  CHECK(score_w23(seg) == prf(2, 3, 1, 1, 4, 5));
  CHECK(score_w25(seg) == prf(2, 3, 1, 1, 4, 5));
}

TEST_CASE("reference segment: one hypothesis span facing two gold parts") {
  const Segment seg = example_segment_split_gold();

  CHECK(score_em(seg) == prf(1, 2, 1, 3, 2, 5));
  CHECK(score_mp(seg, 1) == prf(1, 1, 2, 3, 4, 5));
  CHECK(score_mpp(seg) == prf(7, 9, 2, 3, 28, 39));
  CHECK(score_approx_w25(seg) == prf(2, 3, 8, 11, 16, 23));
  CHECK(score_w19(seg) == prf(7, 9, 1, 1, 7, 8));
  CHECK(score_w23(seg) == prf(11, 12, 1, 1, 22, 23));
  CHECK(score_w25(seg) == prf(11, 12, 1, 1, 22, 23));
}

TEST_CASE("duplicated hypothesis spans: coverage forgives, matching does not") {
  const Segment seg =
      make_segment("dup", kText, {at(0, 5), at(0, 5)}, {at(0, 5)});

  CHECK(score_em(seg) == prf(1, 2, 1, 1, 2, 3));
  CHECK(score_mp(seg, 1) == prf(1, 2, 1, 1, 2, 3));
  CHECK(score_mpp(seg) == prf(1, 2, 1, 1, 2, 3));
  CHECK(score_approx_w25(seg) == prf(1, 2, 1, 1, 2, 3));
  CHECK(score_w19(seg) == prf(1, 1, 1, 1, 1, 1));  // many-to-one allowed
  CHECK(score_w23(seg) == prf(1, 1, 1, 1, 1, 1));  // blind to duplicates
  CHECK(score_w25(seg) == prf(1, 2, 1, 1, 2, 3));  // multiplicity restores it
}

TEST_CASE("w19 picks the best-overlapping counterpart, ties to the earliest") {
  // hyp0 overlaps gold0 by 2/union 8 and gold1 by 4/union 10: gold1 wins on
  // ratio and contributes its own overlap to the credit.
  const Segment seg = make_segment("pick", kText, {at(0, 6)},
                                   {at(4, 8), at(2, 10)});
  const W19Credits credits = w19_credits(seg);
  CHECK(credits.hyp_sum == Rational(4, 6));
  CHECK(credits.gold_sum == Rational(2, 4) + Rational(4, 8));

  // Equal ratios with different raw overlaps make the tie-break observable:
  // gold0 (2 of union 4) and gold1 (4 of union 8) both score 1/2, so the
  // earliest wins and the hypothesis credit uses overlap 2, not 4.
  const Segment tie = make_segment("tie", kText, {at(0, 4)},
                                   {at(0, 2), at(0, 8)});
  const W19Credits tie_credits = w19_credits(tie);
  CHECK(tie_credits.hyp_sum == Rational(2, 4));
  CHECK(tie_credits.gold_sum == Rational(2, 2) + Rational(4, 8));
}

TEST_CASE("adjacent spans do not count as overlapping") {
  const Segment seg = make_segment("touch", kText, {at(0, 5)}, {at(5, 10)});
  const Prf zero = prf(0, 1, 0, 1, 0, 1);
  CHECK(score_em(seg) == zero);
  CHECK(score_mp(seg, 1) == zero);
  CHECK(score_mpp(seg) == zero);
  CHECK(score_approx_w25(seg) == zero);
  CHECK(score_w19(seg) == zero);
  CHECK(score_w23(seg) == zero);
  CHECK(score_w25(seg) == zero);
}

TEST_CASE("overlap thresholds gate crossing spans") {
  const Segment seg = make_segment("cross", kText, {at(0, 6)}, {at(4, 10)});
  CHECK(score_mp(seg, 1) == prf(1, 1, 1, 1, 1, 1));
  CHECK(score_mp(seg, 2) == prf(1, 1, 1, 1, 1, 1));
  CHECK(score_mp(seg, 3) == prf(0, 1, 0, 1, 0, 1));
}

TEST_CASE("empty sides score by convention for every measure") {
  const std::vector<MeasureConfig> all = {
      {MeasureKind::kEm, 1},  {MeasureKind::kMp, 1},  {MeasureKind::kMpp, 1},
      {MeasureKind::kApproxW25, 1}, {MeasureKind::kW19, 1},
      {MeasureKind::kW23, 1}, {MeasureKind::kW25, 1}};

  const Segment both = make_segment("both-empty", kText, {}, {});
  const Segment no_hyp = make_segment("no-hyp", kText, {}, {at(0, 5)});
  const Segment no_gold = make_segment("no-gold", kText, {at(0, 5)}, {});

  for (const MeasureConfig& config : all) {
    INFO("measure " << measure_name(config.kind));
    CHECK(score_segment(both, config) == prf(1, 1, 1, 1, 1, 1));
    CHECK(score_segment(no_hyp, config) == prf(1, 1, 0, 1, 0, 1));
    CHECK(score_segment(no_gold, config) == prf(0, 1, 1, 1, 0, 1));
  }
}

TEST_CASE("every measure stays within [0, 1] on random segments") {
  const std::vector<MeasureConfig> all = {
      {MeasureKind::kEm, 1},  {MeasureKind::kMp, 1},  {MeasureKind::kMp, 3},
      {MeasureKind::kMpp, 1}, {MeasureKind::kApproxW25, 1},
      {MeasureKind::kW19, 1}, {MeasureKind::kW23, 1}, {MeasureKind::kW25, 1}};
  for (const Segment& seg : random_segments(7, 150, 40, 4, 10)) {
    for (const MeasureConfig& config : all) {
      const Prf got = score_segment(seg, config);
      INFO("segment " << seg.id << " measure " << measure_name(config.kind));
      CHECK(got.precision >= 0);
      CHECK(got.precision <= 1);
      CHECK(got.recall >= 0);
      CHECK(got.recall <= 1);
      CHECK(got.f >= 0);
      CHECK(got.f <= 1);
      // F never exceeds either component of the harmonic mean.
      CHECK(got.f <= std::max(got.precision, got.recall));
    }
  }
}

TEST_CASE("stricter regimes never outscore more forgiving ones") {
  for (const Segment& seg : random_segments(11, 150, 40, 4, 10)) {
    const Rational em = score_em(seg).f;
    const Rational mpp = score_mpp(seg).f;
    const Rational mp1 = score_mp(seg, 1).f;
    INFO("segment " << seg.id);
    CHECK(em <= mpp);
    CHECK(mpp <= mp1);
  }
}
