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

#ifndef SPANSCORE_IO_HPP
#define SPANSCORE_IO_HPP

#include <optional>
#include <string>
#include <string_view>

#include "core.hpp"

namespace spanscore {

// Line-delimited JSON, one segment per line:
//   {"id": "...", "text": "...", "hypothesis": [...], "gold": [...],
//    "system": "...", "lang_pair": "..."}
// Spans carry "start"/"end" (0-based half-open over Unicode scalar values;
// 1-based inclusive with one_based_inclusive), or "quote"/"occurrence" to
// locate the annotated text verbatim. Optional span labels: "severity",
// "category". Unrecognized fields on segments and spans survive a
// load/serialize round-trip unchanged.
struct LoadOptions {
  bool one_based_inclusive = false;
};

Dataset parse_dataset(std::string_view jsonl, const LoadOptions& options = {});
Dataset load_dataset(const std::string& path, const LoadOptions& options = {});

// One record per line, keys sorted, offsets always 0-based half-open.
std::string serialize_dataset(const Dataset& dataset);

struct ResolvedSpan {
  Span span;
  // True when the quote occurs more than once and no occurrence was given;
  // the first occurrence is returned in that case.
  bool ambiguous = false;
};

// Finds `quoted` in `text`. `occurrence` selects the 0-based occurrence;
// without it the quote must be taken on faith to mean the first one.
ResolvedSpan resolve_span_text(std::u32string_view text,
                               std::u32string_view quoted,
                               std::optional<size_t> occurrence);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace spanscore

#endif  // SPANSCORE_IO_HPP
