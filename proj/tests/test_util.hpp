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

#ifndef SPANSCORE_TESTS_TEST_UTIL_HPP
#define SPANSCORE_TESTS_TEST_UTIL_HPP

#include <string>
#include <vector>

#include "aggregate.hpp"
#include "core.hpp"
#include "measures.hpp"
#include "text.hpp"

namespace spanscore::testutil {

inline AnnotatedSpan at(uint32_t start, uint32_t end) {
  AnnotatedSpan s;
  s.span = {start, end};
  return s;
}

inline Segment make_segment(const std::string& id, const std::string& text,
                            std::vector<AnnotatedSpan> hyp,
                            std::vector<AnnotatedSpan> gold) {
  Segment seg;
  seg.id = id;
  seg.text = utf8_decode(text);
  seg.hypothesis = std::move(hyp);
  seg.gold = std::move(gold);
  return seg;
}

inline SegmentView view(const Dataset& dataset) {
  SegmentView out;
  out.reserve(dataset.segments.size());
  for (const Segment& seg : dataset.segments) out.push_back(&seg);
  return out;
}

inline Prf prf(long pn, long pd, long rn, long rd, long fn, long fd) {
  return Prf{Rational(pn, pd), Rational(rn, rd), Rational(fn, fd)};
}

// 100 segments built to expose averaging gamesmanship: 60 "stray" segments
// whose single hypothesis span has no gold counterpart, 30 one-span perfect
// hits, and 10 two-span perfect hits. Clearing every hypothesis set of size
// one (remove-few:1) raises macro-F from 2/5 to 7/10 while micro-F falls
// from 5/8 to 4/7.
inline Dataset sparse_reward_dataset() {
  Dataset ds;
  const std::string text = "0123456789abcdefghij";
  for (int i = 0; i < 60; ++i) {
    ds.segments.push_back(
        make_segment("stray-" + std::to_string(i), text, {at(2, 7)}, {}));
  }
  for (int i = 0; i < 30; ++i) {
    ds.segments.push_back(make_segment("hit-" + std::to_string(i), text,
                                       {at(3, 9)}, {at(3, 9)}));
  }
  for (int i = 0; i < 10; ++i) {
    ds.segments.push_back(make_segment("pair-" + std::to_string(i), text,
                                       {at(0, 4), at(10, 15)},
                                       {at(0, 4), at(10, 15)}));
  }
  return ds;
}

}  // namespace spanscore::testutil

#endif  // SPANSCORE_TESTS_TEST_UTIL_HPP
