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

#include "fixtures.hpp"

#include <string>

#include "sentinels.hpp"
#include "text.hpp"

namespace spanscore {

namespace {

AnnotatedSpan plain(uint32_t start, uint32_t end) {
  AnnotatedSpan s;
  s.span = {start, end};
  return s;
}

}  // namespace

Segment example_segment_basic() {
  Segment seg;
  seg.id = "basic";
  seg.text = utf8_decode("The quick brown fox jumps");
  seg.hypothesis = {plain(0, 9), plain(16, 19)};
  seg.gold = {plain(4, 9), plain(16, 19)};
  return seg;
}

Segment example_segment_split_gold() {
  Segment seg;
  seg.id = "split-gold";
  seg.text = utf8_decode("The quick brown fox jumps");
  seg.hypothesis = {plain(0, 9), plain(16, 19)};
  seg.gold = {plain(0, 3), plain(4, 9), plain(16, 19)};
  return seg;
}

std::vector<Segment> random_segments(uint64_t seed, size_t count,
                                     uint32_t max_len, uint32_t max_spans,
                                     uint32_t max_span_len) {
  // A couple of multi-byte characters keep the offset/byte distinction
  // honest in anything that round-trips these segments.
  static const std::u32string kAlphabet = utf8_decode("abcdefgh éß語 ");
  std::vector<Segment> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    const uint64_t stream = seed ^ fnv1a64("segment-" + std::to_string(i));
    uint64_t draw = 0;
    const auto next = [&]() { return splitmix64_at(stream, draw++); };

    Segment seg;
    seg.id = "rand-" + std::to_string(i);
    const uint32_t len = 1 + static_cast<uint32_t>(next() % max_len);
    seg.text.reserve(len);
    for (uint32_t c = 0; c < len; ++c) {
      seg.text += kAlphabet[next() % kAlphabet.size()];
    }
    for (auto* side : {&seg.hypothesis, &seg.gold}) {
      const uint32_t n_spans = static_cast<uint32_t>(next() % (max_spans + 1));
      for (uint32_t s = 0; s < n_spans; ++s) {
        AnnotatedSpan span;
        span.span.start = static_cast<uint32_t>(next() % len);
        const uint32_t room = len - span.span.start;
        const uint32_t cap = room < max_span_len ? room : max_span_len;
        span.span.end = span.span.start + 1 +
                        static_cast<uint32_t>(next() % cap);
        side->push_back(span);
      }
    }
    out.push_back(std::move(seg));
  }
  return out;
}

}  // namespace spanscore
