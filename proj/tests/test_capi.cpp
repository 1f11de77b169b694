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

// Exercises the shared library exclusively through its C surface, the way a
// foreign-language binding would.

#define CATCH_CONFIG_MAIN
#include <catch2/catch.hpp>

#include <algorithm>
#include <cstring>
#include <string>

#include "spanscore.h"

namespace {

constexpr const char kTwoSystems[] =
    R"({"id": "1", "text": "The quick brown fox jumps", "system": "alpha", )"
    R"("hypothesis": [{"start": 0, "end": 9}, {"start": 16, "end": 19}], )"
    R"("gold": [{"start": 4, "end": 9}, {"start": 16, "end": 19}]})"
    "\n"
    R"({"id": "1", "text": "The quick brown fox jumps", "system": "beta", )"
    R"("hypothesis": [{"start": 4, "end": 9}, {"start": 16, "end": 19}], )"
    R"("gold": [{"start": 4, "end": 9}, {"start": 16, "end": 19}]})"
    "\n";

struct DatasetHandle {
  spanscore_dataset* ds = nullptr;
  ~DatasetHandle() { spanscore_dataset_free(ds); }
};

struct ReportHandle {
  spanscore_report* report = nullptr;
  ~ReportHandle() { spanscore_report_free(report); }
};

std::string take(char* buffer) {
  REQUIRE(buffer != nullptr);
  std::string out(buffer);
  spanscore_buffer_free(buffer);
  return out;
}

std::string cell(const spanscore_report* report, size_t row,
                 const char* column, int digits = 0) {
  char* buffer = nullptr;
  REQUIRE(spanscore_report_cell(report, row, column, digits, &buffer) ==
          SPANSCORE_OK);
  return take(buffer);
}

}  // namespace

TEST_CASE("version and error strings are always available") {
  REQUIRE(spanscore_version() != nullptr);
  CHECK(std::strlen(spanscore_version()) > 0);
  REQUIRE(spanscore_last_error() != nullptr);
}

TEST_CASE("parsing, scoring, and reading cells through the C api") {
  DatasetHandle data;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);
  CHECK(spanscore_dataset_segments(data.ds) == 2);

  spanscore_options opts{};
  opts.measures = "em,mpp";
  opts.averaging = "micro";

  ReportHandle report;
  REQUIRE(spanscore_score(data.ds, &opts, &report.report) == SPANSCORE_OK);
  REQUIRE(spanscore_report_rows(report.report) == 4);

  // Rows arrive in partition order: alpha/em, alpha/mpp, beta/em, beta/mpp.
  CHECK(cell(report.report, 0, "system") == "alpha");
  CHECK(cell(report.report, 0, "measure") == "em");
  CHECK(cell(report.report, 0, "tau") == "");
  CHECK(cell(report.report, 0, "averaging") == "micro");
  CHECK(cell(report.report, 0, "group") == "ALL");
  CHECK(cell(report.report, 0, "precision") == "0.5000");
  CHECK(cell(report.report, 0, "recall") == "0.5000");
  CHECK(cell(report.report, 0, "f") == "0.5000");
  CHECK(cell(report.report, 0, "n_segments") == "1");
  CHECK(cell(report.report, 0, "n_hyp_spans") == "2");
  CHECK(cell(report.report, 0, "n_gold_spans") == "2");

  CHECK(cell(report.report, 1, "measure") == "mpp");
  CHECK(cell(report.report, 1, "precision", 6) == "0.777778");
  CHECK(cell(report.report, 1, "f", 2) == "0.88");

  CHECK(cell(report.report, 2, "system") == "beta");
  CHECK(cell(report.report, 2, "f") == "1.0000");

  char* buffer = nullptr;
  CHECK(spanscore_report_cell(report.report, 0, "no_such_column", 0,
                              &buffer) == SPANSCORE_ERR_USAGE);
  CHECK(spanscore_report_cell(report.report, 99, "system", 0, &buffer) ==
        SPANSCORE_ERR_USAGE);
}

TEST_CASE("rendering reports in every text format") {
  DatasetHandle data;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);
  spanscore_options opts{};
  opts.measures = "em";

  ReportHandle report;
  REQUIRE(spanscore_score(data.ds, &opts, &report.report) == SPANSCORE_OK);

  char* buffer = nullptr;
  size_t length = 0;
  REQUIRE(spanscore_report_render(report.report, "csv", 4, &buffer,
                                  &length) == SPANSCORE_OK);
  const std::string csv = take(buffer);
  CHECK(csv.size() == length);
  CHECK(csv.find("system,measure,tau,averaging,group,") == 0);
  CHECK(csv.find("alpha,em") != std::string::npos);

  REQUIRE(spanscore_report_render(report.report, "table", 4, &buffer,
                                  nullptr) == SPANSCORE_OK);
  CHECK(take(buffer).find("----") != std::string::npos);

  CHECK(spanscore_report_render(report.report, "svg", 4, &buffer, nullptr) ==
        SPANSCORE_ERR_USAGE);
  CHECK(spanscore_report_render(report.report, "yaml", 4, &buffer, nullptr) ==
        SPANSCORE_ERR_USAGE);
  CHECK(std::string(spanscore_last_error()).find("yaml") !=
        std::string::npos);
}

TEST_CASE("status codes distinguish usage, data, and success") {
  DatasetHandle data;
  CHECK(spanscore_dataset_load("/nonexistent/file.jsonl", 0, &data.ds) ==
        SPANSCORE_ERR_DATA);
  CHECK(std::string(spanscore_last_error()).find("nonexistent") !=
        std::string::npos);

  const char kBad[] = "{not json}";
  CHECK(spanscore_dataset_parse(kBad, sizeof(kBad) - 1, 0, &data.ds) ==
        SPANSCORE_ERR_DATA);

  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);
  spanscore_options opts{};
  opts.measures = "em-ish";
  ReportHandle report;
  CHECK(spanscore_score(data.ds, &opts, &report.report) ==
        SPANSCORE_ERR_USAGE);
  opts.measures = nullptr;
  CHECK(spanscore_score(data.ds, &opts, &report.report) ==
        SPANSCORE_ERR_USAGE);
  CHECK(spanscore_score(data.ds, nullptr, &report.report) ==
        SPANSCORE_ERR_USAGE);
}

TEST_CASE("merging datasets enforces unique ids per system") {
  DatasetHandle a, b;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &a.ds) == SPANSCORE_OK);
  const char kThird[] =
      R"({"id": "2", "text": "more text", "system": "alpha", )"
      R"("hypothesis": [], "gold": []})"
      "\n";
  REQUIRE(spanscore_dataset_parse(kThird, sizeof(kThird) - 1, 0, &b.ds) ==
          SPANSCORE_OK);
  REQUIRE(spanscore_dataset_merge(a.ds, b.ds) == SPANSCORE_OK);
  CHECK(spanscore_dataset_segments(a.ds) == 3);

  // Merging the same records again collides on (system, id).
  CHECK(spanscore_dataset_merge(a.ds, b.ds) == SPANSCORE_ERR_DATA);
  CHECK(std::string(spanscore_last_error()).find("duplicate") !=
        std::string::npos);
  CHECK(spanscore_dataset_segments(a.ds) == 3);  // failed merge left dst alone
}

TEST_CASE("serialization round-trips through the C api") {
  DatasetHandle data;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);
  char* buffer = nullptr;
  size_t length = 0;
  REQUIRE(spanscore_dataset_serialize(data.ds, &buffer, &length) ==
          SPANSCORE_OK);
  const std::string text = take(buffer);
  CHECK(text.size() == length);

  DatasetHandle again;
  REQUIRE(spanscore_dataset_parse(text.c_str(), text.size(), 0, &again.ds) ==
          SPANSCORE_OK);
  char* buffer2 = nullptr;
  REQUIRE(spanscore_dataset_serialize(again.ds, &buffer2, nullptr) ==
          SPANSCORE_OK);
  CHECK(take(buffer2) == text);
}

TEST_CASE("perturbing through the C api") {
  DatasetHandle data;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);

  DatasetHandle cleared;
  REQUIRE(spanscore_dataset_perturb(data.ds, "remove-few:2", 0,
                                    &cleared.ds) == SPANSCORE_OK);
  char* buffer = nullptr;
  REQUIRE(spanscore_dataset_serialize(cleared.ds, &buffer, nullptr) ==
          SPANSCORE_OK);
  const std::string text = take(buffer);
  CHECK(text.find("\"hypothesis\":[]") != std::string::npos);
  CHECK(text.find("\"gold\":[]") == std::string::npos);

  DatasetHandle bad;
  CHECK(spanscore_dataset_perturb(data.ds, "drop:2.0", 0, &bad.ds) ==
        SPANSCORE_ERR_USAGE);

  // Identical calls produce identical bytes.
  DatasetHandle d1, d2;
  REQUIRE(spanscore_dataset_perturb(data.ds, "drop:0.5:11:1", 3, &d1.ds) ==
          SPANSCORE_OK);
  REQUIRE(spanscore_dataset_perturb(data.ds, "drop:0.5:11:1", 3, &d2.ds) ==
          SPANSCORE_OK);
  char *s1 = nullptr, *s2 = nullptr;
  REQUIRE(spanscore_dataset_serialize(d1.ds, &s1, nullptr) == SPANSCORE_OK);
  REQUIRE(spanscore_dataset_serialize(d2.ds, &s2, nullptr) == SPANSCORE_OK);
  CHECK(take(s1) == take(s2));
}

TEST_CASE("sweeping through the C api") {
  DatasetHandle data;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);

  spanscore_options opts{};
  opts.measures = "mp:1";
  opts.perturb = "extend:0";
  opts.sweep = "0, 2, 4";

  ReportHandle report;
  REQUIRE(spanscore_sweep(data.ds, &opts, &report.report) == SPANSCORE_OK);
  CHECK(spanscore_report_rows(report.report) == 6);  // 2 systems x 3 levels
  CHECK(cell(report.report, 0, "param") == "0");

  char* buffer = nullptr;
  REQUIRE(spanscore_report_render(report.report, "svg", 4, &buffer,
                                  nullptr) == SPANSCORE_OK);
  const std::string svg = take(buffer);
  CHECK(svg.find("<svg") == 0);
  CHECK(svg.find("polyline") != std::string::npos);

  // Sweeping without a grid is a usage error.
  opts.sweep = nullptr;
  ReportHandle none;
  CHECK(spanscore_sweep(data.ds, &opts, &none.report) == SPANSCORE_ERR_USAGE);
}

TEST_CASE("ranking through the C api") {
  DatasetHandle data;
  REQUIRE(spanscore_dataset_parse(kTwoSystems, sizeof(kTwoSystems) - 1, 0,
                                  &data.ds) == SPANSCORE_OK);

  spanscore_options opts{};
  opts.measures = "em";
  ReportHandle report;
  REQUIRE(spanscore_rank(data.ds, &opts, &report.report) == SPANSCORE_OK);
  REQUIRE(spanscore_report_rows(report.report) == 2);
  CHECK(cell(report.report, 0, "rank") == "1");
  CHECK(cell(report.report, 0, "system") == "beta");
  CHECK(cell(report.report, 1, "rank") == "2");
  CHECK(cell(report.report, 1, "system") == "alpha");
  CHECK(cell(report.report, 0, "f") == "1.0000");
  // Rank reports have no "group" column.
  char* buffer = nullptr;
  CHECK(spanscore_report_cell(report.report, 0, "group", 0, &buffer) ==
        SPANSCORE_ERR_USAGE);

  // One system is not a ranking.
  const char kSolo[] =
      R"({"id": "1", "text": "abc", "hypothesis": [], "gold": []})"
      "\n";
  DatasetHandle solo;
  REQUIRE(spanscore_dataset_parse(kSolo, sizeof(kSolo) - 1, 0, &solo.ds) ==
          SPANSCORE_OK);
  ReportHandle no_rank;
  CHECK(spanscore_rank(solo.ds, &opts, &no_rank.report) == SPANSCORE_ERR_DATA);
}

TEST_CASE("resolving quotes through the C api") {
  long start = 0, end = 0;
  int ambiguous = -1;
  REQUIRE(spanscore_resolve_span("The quick brown fox", "fox", -1, &start,
                                 &end, &ambiguous) == SPANSCORE_OK);
  CHECK(start == 16);
  CHECK(end == 19);
  CHECK(ambiguous == 0);

  REQUIRE(spanscore_resolve_span("aba aba", "aba", 1, &start, &end,
                                 &ambiguous) == SPANSCORE_OK);
  CHECK(start == 4);
  CHECK(end == 7);

  REQUIRE(spanscore_resolve_span("aba aba", "aba", -1, &start, &end,
                                 &ambiguous) == SPANSCORE_OK);
  CHECK(start == 0);
  CHECK(ambiguous == 1);

  // Offsets are character counts even when the text is multi-byte UTF-8.
  REQUIRE(spanscore_resolve_span("é語 fox", "fox", -1, &start, &end,
                                 &ambiguous) == SPANSCORE_OK);
  CHECK(start == 3);
  CHECK(end == 6);

  CHECK(spanscore_resolve_span("abc", "zzz", -1, &start, &end, &ambiguous) ==
        SPANSCORE_ERR_DATA);
  CHECK(spanscore_resolve_span("abc", "", -1, &start, &end, &ambiguous) ==
        SPANSCORE_ERR_USAGE);
  CHECK(spanscore_resolve_span(nullptr, "a", -1, &start, &end, &ambiguous) ==
        SPANSCORE_ERR_USAGE);
}

TEST_CASE("the embedded selfcheck reports success") {
  char* log = nullptr;
  size_t length = 0;
  int failures = -1;
  REQUIRE(spanscore_selfcheck(&log, &length, &failures) == SPANSCORE_OK);
  const std::string text = take(log);
  CHECK(text.size() == length);
  CHECK(failures == 0);
  CHECK(text.find("ok ") == 0);
  CHECK(text.find("FAIL") == std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') >= 11);
}
