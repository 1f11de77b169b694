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

#include "core.hpp"
#include "errors.hpp"
#include "rational.hpp"
#include "text.hpp"
#include "test_util.hpp"

using namespace spanscore;
using testutil::at;
using testutil::make_segment;

TEST_CASE("span primitives") {
  const Span a{4, 9}, b{16, 19};
  CHECK(span_length(a) == 5);
  CHECK(span_length(b) == 3);
  CHECK(overlap(a, b) == 0);
  CHECK(overlap(Span{0, 9}, a) == 5);
  CHECK(overlap(Span{0, 6}, Span{4, 10}) == 2);
  CHECK(overlap(Span{0, 5}, Span{5, 10}) == 0);  // touching, no overlap
  CHECK(overlap(a, a) == 5);
  CHECK(union_length(Span{0, 9}, a) == 9);
  CHECK(union_length(Span{0, 5}, Span{5, 10}) == 10);
  CHECK(union_length(Span{0, 6}, Span{4, 10}) == 10);
}

TEST_CASE("utf8 round trip counts scalar values") {
  const std::string s = "aé語\U0001F600b";
  const std::u32string u = utf8_decode(s);
  CHECK(u.size() == 5);  // 5 characters despite 11 bytes
  CHECK(utf8_encode(u) == s);

  CHECK_THROWS_AS(utf8_decode("\xff"), DataError);
  CHECK_THROWS_AS(utf8_decode("\xc0\xaf"), DataError);          // overlong
  CHECK_THROWS_AS(utf8_decode("\xed\xa0\x80"), DataError);      // surrogate
  CHECK_THROWS_AS(utf8_decode(std::string("ab\xe8") + "x"), DataError);
}

TEST_CASE("segment validation") {
  const Segment ok = make_segment("s1", "0123456789", {at(0, 4)}, {at(9, 10)});
  CHECK(validate_segment(ok).empty());

  SECTION("span past the end of the text") {
    const Segment bad =
        make_segment("s1", "0123456789", {at(5, 11)}, {});
    const auto issues = validate_segment(bad);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].kind == IssueKind::kOutOfBounds);
    CHECK(issues[0].message.find("s1") != std::string::npos);
  }

  SECTION("empty span") {
    const Segment bad = make_segment("s1", "0123456789", {}, {at(3, 3)});
    const auto issues = validate_segment(bad);
    REQUIRE(issues.size() == 1);
    CHECK(issues[0].kind == IssueKind::kEmptySpan);
  }

  SECTION("offsets count characters, not bytes") {
    // four characters, ten UTF-8 bytes
    const Segment wide = make_segment("s1", "é語\U0001F600x",
                                      {at(0, 4)}, {});
    CHECK(validate_segment(wide).empty());
    const Segment past = make_segment("s1", "é語\U0001F600x",
                                      {at(0, 5)}, {});
    CHECK(validate_segment(past).size() == 1);
  }
}

TEST_CASE("dataset validation and id reuse across systems") {
  Dataset ds;
  ds.segments.push_back(make_segment("seg", "abcdef", {}, {}));
  ds.segments.push_back(make_segment("seg", "abcdef", {}, {}));
  ds.segments[0].system = "alpha";
  ds.segments[1].system = "beta";
  CHECK(validate_dataset(ds).empty());  // same id, different systems

  ds.segments[1].system = "alpha";
  const auto issues = validate_dataset(ds);
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == IssueKind::kDuplicateSegmentId);
  CHECK_THROWS_AS(require_valid(ds), DataError);
}

TEST_CASE("decimal formatting rounds half to even") {
  CHECK(format_decimal(Rational(1, 2), 4) == "0.5000");
  CHECK(format_decimal(Rational(1, 3), 4) == "0.3333");
  CHECK(format_decimal(Rational(2, 3), 4) == "0.6667");
  CHECK(format_decimal(Rational(1), 4) == "1.0000");
  CHECK(format_decimal(Rational(0), 4) == "0.0000");
  // exact midpoints go to the even neighbor
  CHECK(format_decimal(Rational(1, 8), 2) == "0.12");
  CHECK(format_decimal(Rational(3, 8), 2) == "0.38");
  CHECK(format_decimal(Rational(5, 2), 0) == "2");
  CHECK(format_decimal(Rational(7, 2), 0) == "4");
  CHECK(format_decimal(Rational(-1, 8), 2) == "-0.12");
  CHECK(format_decimal(Rational(22, 23), 4) == "0.9565");
  CHECK(format_decimal(Rational(28, 39), 6) == "0.717949");
}
