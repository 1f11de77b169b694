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

#include "io.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "text.hpp"

namespace spanscore {

namespace {

using json = nlohmann::json;

[[noreturn]] void fail_line(size_t line, const std::string& message) {
  throw DataError("line " + std::to_string(line) + ": " + message);
}

std::string get_string(const json& j, const char* key, size_t line,
                       bool required) {
  const auto it = j.find(key);
  if (it == j.end()) {
    if (required) fail_line(line, std::string("missing field \"") + key + "\"");
    return "";
  }
  if (!it->is_string()) {
    fail_line(line, std::string("field \"") + key + "\" must be a string");
  }
  return it->get<std::string>();
}

int64_t get_offset(const json& j, const char* key, size_t line) {
  const auto it = j.find(key);
  if (it == j.end()) {
    fail_line(line, std::string("span is missing \"") + key + "\"");
  }
  if (!it->is_number_integer()) {
    fail_line(line, std::string("span field \"") + key +
                        "\" must be an integer");
  }
  if (it->is_number_unsigned() &&
      it->get<uint64_t>() > static_cast<uint64_t>(INT64_MAX)) {
    fail_line(line, "span offsets out of range");
  }
  return it->get<int64_t>();
}

AnnotatedSpan parse_span(const json& record, size_t line, size_t text_len,
                         const std::u32string& text, bool one_based) {
  if (!record.is_object()) fail_line(line, "span entries must be objects");
  AnnotatedSpan out;
  json extras = record;

  int64_t start = 0, end = 0;
  if (record.contains("quote") && !record.contains("start")) {
    const std::string quote = get_string(record, "quote", line, true);
    std::optional<size_t> occurrence;
    if (const auto it = record.find("occurrence"); it != record.end()) {
      if (!it->is_number_unsigned()) {
        fail_line(line, "span field \"occurrence\" must be a non-negative "
                        "integer");
      }
      occurrence = it->get<size_t>();
    }
    ResolvedSpan resolved;
    try {
      resolved = resolve_span_text(text, utf8_decode(quote), occurrence);
    } catch (const std::runtime_error& e) {
      fail_line(line, e.what());
    }
    start = resolved.span.start;
    end = resolved.span.end;
    extras.erase("quote");
    extras.erase("occurrence");
  } else {
    start = get_offset(record, "start", line);
    end = get_offset(record, "end", line);
    if (one_based) {
      // 1-based inclusive [i, j] becomes 0-based half-open [i-1, j).
      start -= 1;
    }
    extras.erase("start");
    extras.erase("end");
  }

  if (start < 0 || end < start ||
      static_cast<uint64_t>(end) > UINT32_MAX) {
    fail_line(line, "span offsets out of range");
  }
  if (end == start) {
    fail_line(line, "empty span [" + std::to_string(start) + ", " +
                        std::to_string(end) + ")");
  }
  if (static_cast<uint64_t>(end) > text_len) {
    fail_line(line, "span [" + std::to_string(start) + ", " +
                        std::to_string(end) + ") exceeds text length " +
                        std::to_string(text_len));
  }
  out.span.start = static_cast<uint32_t>(start);
  out.span.end = static_cast<uint32_t>(end);

  if (extras.contains("severity")) {
    out.severity = get_string(extras, "severity", line, true);
    extras.erase("severity");
  }
  if (extras.contains("category")) {
    out.category = get_string(extras, "category", line, true);
    extras.erase("category");
  }
  if (!extras.empty()) out.extra_json = extras.dump();
  return out;
}

std::vector<AnnotatedSpan> parse_side(const json& record, const char* key,
                                      size_t line, const std::u32string& text,
                                      bool one_based) {
  const auto it = record.find(key);
  if (it == record.end()) {
    fail_line(line, std::string("missing field \"") + key + "\"");
  }
  if (!it->is_array()) {
    fail_line(line, std::string("field \"") + key + "\" must be an array");
  }
  std::vector<AnnotatedSpan> out;
  out.reserve(it->size());
  for (const json& span : *it) {
    out.push_back(parse_span(span, line, text.size(), text, one_based));
  }
  return out;
}

json span_to_json(const AnnotatedSpan& span) {
  json j = span.extra_json.empty() ? json::object()
                                   : json::parse(span.extra_json);
  j["start"] = span.span.start;
  j["end"] = span.span.end;
  if (!span.severity.empty()) j["severity"] = span.severity;
  if (!span.category.empty()) j["category"] = span.category;
  return j;
}

}  // namespace

Dataset parse_dataset(std::string_view jsonl, const LoadOptions& options) {
  Dataset dataset;
  size_t line_number = 0;
  size_t pos = 0;
  while (pos <= jsonl.size()) {
    size_t eol = jsonl.find('\n', pos);
    if (eol == std::string_view::npos) eol = jsonl.size();
    std::string_view line = jsonl.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error& e) {
      fail_line(line_number, std::string("not valid JSON: ") + e.what());
    }
    if (!record.is_object()) fail_line(line_number, "record must be an object");

    Segment segment;
    segment.id = get_string(record, "id", line_number, true);
    try {
      segment.text = utf8_decode(get_string(record, "text", line_number, true));
    } catch (const DataError& e) {
      fail_line(line_number, e.what());
    }
    segment.hypothesis = parse_side(record, "hypothesis", line_number,
                                    segment.text, options.one_based_inclusive);
    segment.gold = parse_side(record, "gold", line_number, segment.text,
                              options.one_based_inclusive);
    segment.system = get_string(record, "system", line_number, false);
    segment.lang_pair = get_string(record, "lang_pair", line_number, false);

    json extras = record;
    for (const char* key :
         {"id", "text", "hypothesis", "gold", "system", "lang_pair"}) {
      extras.erase(key);
    }
    if (!extras.empty()) segment.extra_json = extras.dump();

    dataset.segments.push_back(std::move(segment));
  }
  require_valid(dataset);
  return dataset;
}

Dataset load_dataset(const std::string& path, const LoadOptions& options) {
  try {
    return parse_dataset(read_file(path), options);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string serialize_dataset(const Dataset& dataset) {
  std::string out;
  for (const Segment& segment : dataset.segments) {
    json j = segment.extra_json.empty() ? json::object()
                                        : json::parse(segment.extra_json);
    j["id"] = segment.id;
    j["text"] = utf8_encode(segment.text);
    json hyp = json::array(), gold = json::array();
    for (const AnnotatedSpan& s : segment.hypothesis) {
      hyp.push_back(span_to_json(s));
    }
    for (const AnnotatedSpan& s : segment.gold) gold.push_back(span_to_json(s));
    j["hypothesis"] = std::move(hyp);
    j["gold"] = std::move(gold);
    if (!segment.system.empty()) j["system"] = segment.system;
    if (!segment.lang_pair.empty()) j["lang_pair"] = segment.lang_pair;
    out += j.dump();
    out += '\n';
  }
  return out;
}

ResolvedSpan resolve_span_text(std::u32string_view text,
                               std::u32string_view quoted,
                               std::optional<size_t> occurrence) {
  if (quoted.empty()) {
    throw ConfigError("cannot resolve an empty quote");
  }
  std::vector<size_t> starts;
  for (size_t from = 0;;) {
    const size_t at = text.find(quoted, from);
    if (at == std::u32string_view::npos) break;
    starts.push_back(at);
    from = at + 1;  // occurrences may overlap
  }
  if (starts.empty()) {
    throw DataError("quote \"" + utf8_encode(quoted) +
                    "\" does not occur in the text");
  }
  const size_t index = occurrence.value_or(0);
  if (index >= starts.size()) {
    throw DataError("quote \"" + utf8_encode(quoted) + "\" has only " +
                    std::to_string(starts.size()) + " occurrence(s), index " +
                    std::to_string(index) + " requested");
  }
  ResolvedSpan out;
  out.span.start = static_cast<uint32_t>(starts[index]);
  out.span.end = static_cast<uint32_t>(starts[index] + quoted.size());
  out.ambiguous = !occurrence.has_value() && starts.size() > 1;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open \"" + path + "\" for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DataError("failed while reading \"" + path + "\"");
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open \"" + path + "\" for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw DataError("failed while writing \"" + path + "\"");
}

}  // namespace spanscore
