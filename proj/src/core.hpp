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

#ifndef SPANSCORE_CORE_HPP
#define SPANSCORE_CORE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace spanscore {

// Half-open character interval [start, end) over a segment's text, counted
// in Unicode scalar values. Empty spans are invalid everywhere.
struct Span {
  uint32_t start = 0;
  uint32_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

inline uint32_t span_length(Span s) { return s.end - s.start; }

inline uint32_t overlap(Span a, Span b) {
  const uint32_t lo = a.start > b.start ? a.start : b.start;
  const uint32_t hi = a.end < b.end ? a.end : b.end;
  return hi > lo ? hi - lo : 0;
}

inline uint32_t union_length(Span a, Span b) {
  return span_length(a) + span_length(b) - overlap(a, b);
}

// A span plus the labels an annotation may carry. Labels are not used by
// any score; they are preserved for round-trips and future weighting.
// extra_json keeps unrecognized record fields as a serialized JSON object
// ("" when there were none).
struct AnnotatedSpan {
  Span span;
  std::string severity;   // "" = absent
  std::string category;   // "" = absent
  std::string extra_json;

  friend bool operator==(const AnnotatedSpan&, const AnnotatedSpan&) = default;
};

struct Segment {
  std::string id;
  std::u32string text;
  std::vector<AnnotatedSpan> hypothesis;
  std::vector<AnnotatedSpan> gold;
  std::string system;     // "" = unattributed ("default" on output)
  std::string lang_pair;  // "" = unknown
  std::string extra_json;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Dataset {
  std::vector<Segment> segments;
};

enum class IssueKind {
  kOutOfBounds,
  kEmptySpan,
  kDuplicateSegmentId,
};

struct ValidationIssue {
  IssueKind kind;
  std::string message;
};

// Checks every span of the segment against its text: spans must be
// non-empty and must end at or before the text length.
std::vector<ValidationIssue> validate_segment(const Segment& segment);

// Segment checks plus uniqueness of (system, id) pairs. Ids may repeat
// across systems — that is how several systems annotate one test set — but
// never within one system.
std::vector<ValidationIssue> validate_dataset(const Dataset& dataset);

// Throws DataError listing every issue, or returns silently.
void require_valid(const Dataset& dataset);

}  // namespace spanscore

#endif  // SPANSCORE_CORE_HPP
