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

#include "spanscore.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "aggregate.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "io.hpp"
#include "report.hpp"
#include "runner.hpp"
#include "sentinels.hpp"
#include "text.hpp"

// The C surface: every entry point catches all exceptions, stashes the
// message in thread-local storage, and maps the exception type to a status
// code. No exception may cross the library boundary.

struct spanscore_dataset {
  spanscore::Dataset dataset;
};

struct spanscore_report {
  // Either scoring rows (score/sweep) or ranking rows.
  std::variant<std::vector<spanscore::ReportRow>,
               std::vector<spanscore::RankRow>>
      rows;
};

namespace {

thread_local std::string g_last_error;

spanscore_status fail(spanscore_status code, const char* what) {
  g_last_error = what;
  return code;
}

template <typename Fn>
spanscore_status guarded(Fn&& fn) {
  try {
    fn();
    return SPANSCORE_OK;
  } catch (const spanscore::ConfigError& e) {
    return fail(SPANSCORE_ERR_USAGE, e.what());
  } catch (const spanscore::DataError& e) {
    return fail(SPANSCORE_ERR_DATA, e.what());
  } catch (const std::exception& e) {
    return fail(SPANSCORE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SPANSCORE_ERR_INTERNAL, "unknown error");
  }
}

char* copy_out(const std::string& s) {
  char* buffer = static_cast<char*>(::malloc(s.size() + 1));
  if (!buffer) throw std::bad_alloc();
  std::memcpy(buffer, s.data(), s.size());
  buffer[s.size()] = '\0';
  return buffer;
}

std::vector<std::string> split_list(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  const std::string s(csv);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    std::string item = s.substr(pos, next - pos);
    // trim ascii whitespace
    const size_t b = item.find_first_not_of(" \t");
    const size_t e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
    pos = next + 1;
  }
  return out;
}

spanscore::RunConfig build_config(const spanscore_options* opts) {
  using namespace spanscore;
  if (!opts) throw ConfigError("options must not be null");
  RunConfig config;
  for (const std::string& token : split_list(opts->measures)) {
    config.measures.push_back(parse_measure(token));
  }
  if (config.measures.empty()) {
    throw ConfigError("at least one measure is required");
  }
  for (const std::string& token : split_list(opts->averaging)) {
    config.averaging.push_back(parse_averaging(token));
  }
  if (opts->group_by && *opts->group_by) {
    config.group_by = parse_group_by(opts->group_by);
  }
  config.pool_groups = opts->pool_groups != 0;
  if (opts->perturb && *opts->perturb) {
    config.perturb = parse_perturbation(opts->perturb);
  }
  config.sweep_grid = split_list(opts->sweep);
  config.workers = opts->workers > 0 ? opts->workers : 1;
  config.budget = opts->budget > 0 ? opts->budget : kDefaultBudget;
  return config;
}

}  // namespace

extern "C" {

const char* spanscore_version(void) { return "1.0.0"; }

const char* spanscore_last_error(void) { return g_last_error.c_str(); }

spanscore_status spanscore_dataset_load(const char* path,
                                        int one_based_inclusive,
                                        spanscore_dataset** out) {
  return guarded([&] {
    if (!path || !out) throw spanscore::ConfigError("null argument");
    spanscore::LoadOptions options;
    options.one_based_inclusive = one_based_inclusive != 0;
    auto handle = std::make_unique<spanscore_dataset>();
    handle->dataset = spanscore::load_dataset(path, options);
    *out = handle.release();
  });
}

spanscore_status spanscore_dataset_parse(const char* jsonl, size_t length,
                                         int one_based_inclusive,
                                         spanscore_dataset** out) {
  return guarded([&] {
    if (!jsonl || !out) throw spanscore::ConfigError("null argument");
    spanscore::LoadOptions options;
    options.one_based_inclusive = one_based_inclusive != 0;
    auto handle = std::make_unique<spanscore_dataset>();
    handle->dataset =
        spanscore::parse_dataset(std::string_view(jsonl, length), options);
    *out = handle.release();
  });
}

spanscore_status spanscore_dataset_merge(spanscore_dataset* dst,
                                         const spanscore_dataset* src) {
  return guarded([&] {
    if (!dst || !src) throw spanscore::ConfigError("null argument");
    spanscore::Dataset merged = dst->dataset;
    merged.segments.insert(merged.segments.end(), src->dataset.segments.begin(),
                           src->dataset.segments.end());
    spanscore::require_valid(merged);
    dst->dataset = std::move(merged);
  });
}

size_t spanscore_dataset_segments(const spanscore_dataset* ds) {
  return ds ? ds->dataset.segments.size() : 0;
}

spanscore_status spanscore_dataset_serialize(const spanscore_dataset* ds,
                                             char** out, size_t* out_length) {
  return guarded([&] {
    if (!ds || !out) throw spanscore::ConfigError("null argument");
    const std::string text = spanscore::serialize_dataset(ds->dataset);
    *out = copy_out(text);
    if (out_length) *out_length = text.size();
  });
}

void spanscore_dataset_free(spanscore_dataset* ds) { delete ds; }

spanscore_status spanscore_dataset_perturb(const spanscore_dataset* ds,
                                           const char* spec,
                                           uint32_t repetition,
                                           spanscore_dataset** out) {
  return guarded([&] {
    if (!ds || !spec || !out) throw spanscore::ConfigError("null argument");
    const spanscore::PerturbationSpec parsed =
        spanscore::parse_perturbation(spec);
    auto handle = std::make_unique<spanscore_dataset>();
    handle->dataset =
        spanscore::apply_perturbation(ds->dataset, parsed, repetition);
    *out = handle.release();
  });
}

spanscore_status spanscore_score(const spanscore_dataset* ds,
                                 const spanscore_options* opts,
                                 spanscore_report** out) {
  return guarded([&] {
    if (!ds || !out) throw spanscore::ConfigError("null argument");
    auto handle = std::make_unique<spanscore_report>();
    handle->rows = spanscore::cmd_score(ds->dataset, build_config(opts));
    *out = handle.release();
  });
}

spanscore_status spanscore_sweep(const spanscore_dataset* ds,
                                 const spanscore_options* opts,
                                 spanscore_report** out) {
  return guarded([&] {
    if (!ds || !out) throw spanscore::ConfigError("null argument");
    auto handle = std::make_unique<spanscore_report>();
    handle->rows = spanscore::cmd_sweep(ds->dataset, build_config(opts));
    *out = handle.release();
  });
}

spanscore_status spanscore_rank(const spanscore_dataset* ds,
                                const spanscore_options* opts,
                                spanscore_report** out) {
  return guarded([&] {
    if (!ds || !out) throw spanscore::ConfigError("null argument");
    auto handle = std::make_unique<spanscore_report>();
    handle->rows = spanscore::cmd_rank(ds->dataset, build_config(opts));
    *out = handle.release();
  });
}

size_t spanscore_report_rows(const spanscore_report* report) {
  if (!report) return 0;
  if (const auto* rows =
          std::get_if<std::vector<spanscore::ReportRow>>(&report->rows)) {
    return rows->size();
  }
  return std::get<std::vector<spanscore::RankRow>>(report->rows).size();
}

spanscore_status spanscore_report_cell(const spanscore_report* report,
                                       size_t row, const char* column,
                                       int digits, char** out) {
  return guarded([&] {
    using namespace spanscore;
    if (!report || !column || !out) throw ConfigError("null argument");
    if (digits <= 0) digits = 4;
    const std::string name(column);
    std::string value;
    bool found = true;

    if (const auto* rows = std::get_if<std::vector<ReportRow>>(&report->rows)) {
      if (row >= rows->size()) throw ConfigError("row index out of range");
      const ReportRow& r = (*rows)[row];
      if (name == "system") value = r.system;
      else if (name == "measure") value = measure_name(r.measure.kind);
      else if (name == "tau")
        value = r.measure.kind == MeasureKind::kMp
                    ? std::to_string(r.measure.tau)
                    : "";
      else if (name == "averaging") value = averaging_name(r.averaging);
      else if (name == "group") value = r.group;
      else if (name == "precision")
        value = format_decimal(r.prf.precision, digits);
      else if (name == "recall") value = format_decimal(r.prf.recall, digits);
      else if (name == "f") value = format_decimal(r.prf.f, digits);
      else if (name == "n_segments") value = std::to_string(r.n_segments);
      else if (name == "n_hyp_spans") value = std::to_string(r.n_hyp_spans);
      else if (name == "n_gold_spans") value = std::to_string(r.n_gold_spans);
      else if (name == "param") value = r.sweep ? r.sweep->param : "";
      else if (name == "p_min")
        value = r.sweep ? format_decimal(r.sweep->p_min, digits) : "";
      else if (name == "p_max")
        value = r.sweep ? format_decimal(r.sweep->p_max, digits) : "";
      else if (name == "r_min")
        value = r.sweep ? format_decimal(r.sweep->r_min, digits) : "";
      else if (name == "r_max")
        value = r.sweep ? format_decimal(r.sweep->r_max, digits) : "";
      else if (name == "f_min")
        value = r.sweep ? format_decimal(r.sweep->f_min, digits) : "";
      else if (name == "f_max")
        value = r.sweep ? format_decimal(r.sweep->f_max, digits) : "";
      else found = false;
    } else {
      const auto& ranked = std::get<std::vector<RankRow>>(report->rows);
      if (row >= ranked.size()) throw ConfigError("row index out of range");
      const RankRow& r = ranked[row];
      if (name == "measure") value = measure_name(r.measure.kind);
      else if (name == "tau")
        value = r.measure.kind == MeasureKind::kMp
                    ? std::to_string(r.measure.tau)
                    : "";
      else if (name == "averaging") value = averaging_name(r.averaging);
      else if (name == "rank") value = std::to_string(r.rank);
      else if (name == "system") value = r.system;
      else if (name == "precision")
        value = format_decimal(r.prf.precision, digits);
      else if (name == "recall") value = format_decimal(r.prf.recall, digits);
      else if (name == "f") value = format_decimal(r.prf.f, digits);
      else found = false;
    }
    if (!found) throw ConfigError("unknown column \"" + name + "\"");
    *out = copy_out(value);
  });
}

spanscore_status spanscore_report_render(const spanscore_report* report,
                                         const char* format, int digits,
                                         char** out, size_t* out_length) {
  return guarded([&] {
    using namespace spanscore;
    if (!report || !format || !out) throw ConfigError("null argument");
    if (digits <= 0) digits = 4;
    const ReportFormat fmt = parse_format(format);
    std::string text;
    if (const auto* rows = std::get_if<std::vector<ReportRow>>(&report->rows)) {
      text = emit_report(*rows, fmt, digits);
    } else {
      text = emit_ranking(std::get<std::vector<RankRow>>(report->rows), fmt,
                          digits);
    }
    *out = copy_out(text);
    if (out_length) *out_length = text.size();
  });
}

void spanscore_report_free(spanscore_report* report) { delete report; }

spanscore_status spanscore_resolve_span(const char* text, const char* quoted,
                                        long occurrence, long* start,
                                        long* end, int* ambiguous) {
  return guarded([&] {
    using namespace spanscore;
    if (!text || !quoted || !start || !end) {
      throw ConfigError("null argument");
    }
    std::optional<size_t> occ;
    if (occurrence >= 0) occ = static_cast<size_t>(occurrence);
    const ResolvedSpan resolved =
        resolve_span_text(utf8_decode(text), utf8_decode(quoted), occ);
    *start = static_cast<long>(resolved.span.start);
    *end = static_cast<long>(resolved.span.end);
    if (ambiguous) *ambiguous = resolved.ambiguous ? 1 : 0;
  });
}

spanscore_status spanscore_selfcheck(char** log, size_t* log_length,
                                     int* failures) {
  return guarded([&] {
    const auto results = spanscore::run_selfcheck();
    int failed = 0;
    std::string text;
    for (const auto& result : results) {
      if (result.passed) {
        text += "ok " + result.name + "\n";
      } else {
        ++failed;
        text += "FAIL " + result.name + ": " + result.detail + "\n";
      }
    }
    if (failures) *failures = failed;
    if (log) {
      *log = copy_out(text);
      if (log_length) *log_length = text.size();
    }
  });
}

void spanscore_buffer_free(char* buffer) { ::free(buffer); }

}  // extern "C"
