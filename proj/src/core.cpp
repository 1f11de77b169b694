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

#include "core.hpp"

#include <set>
#include <utility>

#include "errors.hpp"

namespace spanscore {

namespace {

void check_side(const Segment& segment, const char* side,
                const std::vector<AnnotatedSpan>& spans,
                std::vector<ValidationIssue>& issues) {
  const auto text_len = segment.text.size();
  for (size_t i = 0; i < spans.size(); ++i) {
    const Span s = spans[i].span;
    const std::string where = "segment \"" + segment.id + "\" " + side + "[" +
                              std::to_string(i) + "]";
    if (s.end <= s.start) {
      issues.push_back({IssueKind::kEmptySpan,
                        where + ": empty span [" + std::to_string(s.start) +
                            ", " + std::to_string(s.end) + ")"});
      continue;
    }
    if (s.end > text_len) {
      issues.push_back(
          {IssueKind::kOutOfBounds,
           where + ": span [" + std::to_string(s.start) + ", " +
               std::to_string(s.end) + ") exceeds text length " +
               std::to_string(text_len)});
    }
  }
}

}  // namespace

std::vector<ValidationIssue> validate_segment(const Segment& segment) {
  std::vector<ValidationIssue> issues;
  check_side(segment, "hypothesis", segment.hypothesis, issues);
  check_side(segment, "gold", segment.gold, issues);
  return issues;
}

std::vector<ValidationIssue> validate_dataset(const Dataset& dataset) {
  std::vector<ValidationIssue> issues;
  std::set<std::pair<std::string, std::string>> seen;
  for (const Segment& segment : dataset.segments) {
    auto seg_issues = validate_segment(segment);
    issues.insert(issues.end(), seg_issues.begin(), seg_issues.end());
    if (!seen.insert({segment.system, segment.id}).second) {
      std::string message = "duplicate segment id \"" + segment.id + "\"";
      if (!segment.system.empty()) {
        message += " for system \"" + segment.system + "\"";
      }
      issues.push_back({IssueKind::kDuplicateSegmentId, std::move(message)});
    }
  }
  return issues;
}

void require_valid(const Dataset& dataset) {
  const auto issues = validate_dataset(dataset);
  if (issues.empty()) return;
  std::string message = "invalid dataset:";
  for (const ValidationIssue& issue : issues) {
    message += "\n  " + issue.message;
  }
  throw DataError(message);
}

}  // namespace spanscore
