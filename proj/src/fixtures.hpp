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

#ifndef SPANSCORE_FIXTURES_HPP
#define SPANSCORE_FIXTURES_HPP

#include <cstdint>
#include <vector>

#include "core.hpp"

namespace spanscore {

// Tiny segments with scores that are easy to verify by hand; used by the
// self-check command and pinned down further in the test suite.

// "The quick brown fox jumps" with gold errors "quick" and "fox"; the
// hypothesis merges "The quick" into one span and hits "fox" exactly.
Segment example_segment_basic();

// Same hypothesis, but the gold annotation splits the start of the sentence
// into "The" and "quick", so one hypothesis span faces two gold spans.
Segment example_segment_split_gold();

// Deterministic pseudo-random segments for oracle comparisons: text length
// in [1, max_len], up to max_spans spans per side, span lengths capped at
// max_span_len. Same seed, same segments — on every platform.
std::vector<Segment> random_segments(uint64_t seed, size_t count,
                                     uint32_t max_len, uint32_t max_spans,
                                     uint32_t max_span_len);

}  // namespace spanscore

#endif  // SPANSCORE_FIXTURES_HPP
