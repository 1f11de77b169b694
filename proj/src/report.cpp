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

#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "errors.hpp"

namespace spanscore {

namespace {

constexpr const char* kScoreColumns[] = {
    "system",     "measure",     "tau",          "averaging",
    "group",      "precision",   "recall",       "f",
    "n_segments", "n_hyp_spans", "n_gold_spans",
};
constexpr const char* kSweepColumns[] = {
    "param", "p_min", "p_max", "r_min", "r_max", "f_min", "f_max",
};
constexpr const char* kRankColumns[] = {
    "measure", "tau", "averaging", "rank", "system", "precision", "recall", "f",
};

bool numeric_column(const std::string& name) {
  static const std::set<std::string> kText = {"system", "measure", "averaging",
                                              "group"};
  return kText.find(name) == kText.end();
}

std::string tau_cell(const MeasureConfig& m) {
  return m.kind == MeasureKind::kMp ? std::to_string(m.tau) : "";
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_delimited(const std::vector<std::string>& header,
                             const std::vector<std::vector<std::string>>& rows,
                             char sep) {
  std::string out;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += sep;
      if (sep == ',') {
        out += csv_escape(cells[i]);
      } else {
        if (cells[i].find_first_of("\t\n\r") != std::string::npos) {
          throw DataError("field contains a tab or newline; use csv output");
        }
        out += cells[i];
      }
    }
    out += '\n';
  };
  emit_row(header);
  for (const auto& row : rows) emit_row(row);
  return out;
}

std::string render_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
  std::vector<size_t> width(header.size());
  for (size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  std::string out;
  auto emit_row = [&](const std::vector<std::string>& cells) {
    for (size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      const size_t pad = width[i] - cells[i].size();
      if (numeric_column(header[i])) {
        out.append(pad, ' ');
        out += cells[i];
      } else {
        out += cells[i];
        if (i + 1 < cells.size()) out.append(pad, ' ');
      }
    }
    out += '\n';
  };
  emit_row(header);
  size_t total = header.empty() ? 0 : 2 * (header.size() - 1);
  for (const size_t w : width) total += w;
  out.append(total, '-');
  out += '\n';
  for (const auto& row : rows) emit_row(row);
  return out;
}

std::string fmt_px(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string xml_escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string render_svg(const std::vector<ReportRow>& rows, int digits) {
  for (const ReportRow& row : rows) {
    if (!row.sweep) {
      throw ConfigError("svg output is only defined for sweep results");
    }
  }
  const double width = 760, height = 480;
  const double left = 70, right = 190, top = 30, bottom = 50;
  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;

  double x_min = rows.front().sweep->param_value, x_max = x_min;
  for (const ReportRow& row : rows) {
    x_min = std::min(x_min, row.sweep->param_value);
    x_max = std::max(x_max, row.sweep->param_value);
  }
  const double x_range = x_max > x_min ? x_max - x_min : 1.0;
  auto x_px = [&](double v) {
    if (x_max == x_min) return left + plot_w / 2;
    return left + (v - x_min) / x_range * plot_w;
  };
  auto y_px = [&](double f) { return top + (1.0 - f) * plot_h; };

  // One polyline per (system, measure, averaging, group), points in
  // ascending parameter order.
  std::vector<std::string> labels;
  std::vector<std::vector<const ReportRow*>> series;
  for (const ReportRow& row : rows) {
    std::string label = row.system + " / " +
                        std::string(measure_name(row.measure.kind));
    if (row.measure.kind == MeasureKind::kMp) {
      label += ":" + std::to_string(row.measure.tau);
    }
    label += " / " + std::string(averaging_name(row.averaging));
    if (row.group != "ALL") label += " / " + row.group;
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
      labels.push_back(label);
      series.emplace_back();
      series.back().push_back(&row);
    } else {
      series[static_cast<size_t>(it - labels.begin())].push_back(&row);
    }
  }

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_px(width) +
         "\" height=\"" + fmt_px(height) + "\" viewBox=\"0 0 " +
         fmt_px(width) + " " + fmt_px(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<g font-family=\"sans-serif\" font-size=\"12\">\n";

  // axes
  svg += "<line x1=\"" + fmt_px(left) + "\" y1=\"" + fmt_px(top) + "\" x2=\"" +
         fmt_px(left) + "\" y2=\"" + fmt_px(top + plot_h) +
         "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt_px(left) + "\" y1=\"" + fmt_px(top + plot_h) +
         "\" x2=\"" + fmt_px(left + plot_w) + "\" y2=\"" +
         fmt_px(top + plot_h) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double f = i / 5.0;
    const double y = y_px(f);
    svg += "<line x1=\"" + fmt_px(left - 4) + "\" y1=\"" + fmt_px(y) +
           "\" x2=\"" + fmt_px(left) + "\" y2=\"" + fmt_px(y) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_px(left - 8) + "\" y=\"" + fmt_px(y + 4) +
           "\" text-anchor=\"end\">" + fmt_px(f) + "</text>\n";
  }
  std::set<double> x_ticks;
  for (const ReportRow& row : rows) x_ticks.insert(row.sweep->param_value);
  for (const double v : x_ticks) {
    const double x = x_px(v);
    svg += "<line x1=\"" + fmt_px(x) + "\" y1=\"" + fmt_px(top + plot_h) +
           "\" x2=\"" + fmt_px(x) + "\" y2=\"" + fmt_px(top + plot_h + 4) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt_px(x) + "\" y=\"" + fmt_px(top + plot_h + 18) +
           "\" text-anchor=\"middle\">" + fmt_px(v) + "</text>\n";
  }
  svg += "<text x=\"" + fmt_px(left + plot_w / 2) + "\" y=\"" +
         fmt_px(height - 10) +
         "\" text-anchor=\"middle\">perturbation level</text>\n";
  svg += "<text x=\"16\" y=\"" + fmt_px(top + plot_h / 2) +
         "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         fmt_px(top + plot_h / 2) + ")\">F</text>\n";

  for (size_t s = 0; s < series.size(); ++s) {
    auto points = series[s];
    std::sort(points.begin(), points.end(),
              [](const ReportRow* a, const ReportRow* b) {
                return a->sweep->param_value < b->sweep->param_value;
              });
    const char* color = kPalette[s % (sizeof(kPalette) / sizeof(*kPalette))];
    std::string path;
    for (const ReportRow* row : points) {
      if (!path.empty()) path += " ";
      path += fmt_px(x_px(row->sweep->param_value)) + "," +
              fmt_px(y_px(to_double(row->prf.f)));
    }
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\" points=\"" + path + "\"/>\n";
    for (const ReportRow* row : points) {
      svg += "<circle cx=\"" + fmt_px(x_px(row->sweep->param_value)) +
             "\" cy=\"" + fmt_px(y_px(to_double(row->prf.f))) +
             "\" r=\"3\" fill=\"";
      svg += color;
      svg += "\"><title>f=" + format_decimal(row->prf.f, digits) +
             "</title></circle>\n";
    }
    const double ly = top + 16 + 18 * static_cast<double>(s);
    svg += "<rect x=\"" + fmt_px(left + plot_w + 16) + "\" y=\"" +
           fmt_px(ly - 9) + "\" width=\"12\" height=\"12\" fill=\"";
    svg += color;
    svg += "\"/>\n";
    svg += "<text x=\"" + fmt_px(left + plot_w + 32) + "\" y=\"" +
           fmt_px(ly + 2) + "\">" + xml_escape(labels[s]) + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

void sort_rows(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const ReportRow& a, const ReportRow& b) {
              if (a.group != b.group) return a.group < b.group;
              if (a.measure.kind != b.measure.kind) {
                return static_cast<int>(a.measure.kind) <
                       static_cast<int>(b.measure.kind);
              }
              if (a.system != b.system) return a.system < b.system;
              if (a.measure.tau != b.measure.tau) {
                return a.measure.tau < b.measure.tau;
              }
              if (a.averaging != b.averaging) {
                return static_cast<int>(a.averaging) <
                       static_cast<int>(b.averaging);
              }
              const double pa = a.sweep ? a.sweep->param_value : 0.0;
              const double pb = b.sweep ? b.sweep->param_value : 0.0;
              if (pa != pb) return pa < pb;
              const std::string& sa = a.sweep ? a.sweep->param : std::string();
              const std::string& sb = b.sweep ? b.sweep->param : std::string();
              return sa < sb;
            });
}

}  // namespace

ReportFormat parse_format(std::string_view token) {
  if (token == "csv") return ReportFormat::kCsv;
  if (token == "tsv") return ReportFormat::kTsv;
  if (token == "table") return ReportFormat::kTable;
  if (token == "svg") return ReportFormat::kSvg;
  throw ConfigError("unknown format \"" + std::string(token) +
                    "\" (expected csv, tsv, table, or svg)");
}

std::string emit_report(std::vector<ReportRow> rows, ReportFormat format,
                        int digits) {
  if (rows.empty()) throw DataError("nothing to report");
  sort_rows(rows);
  if (format == ReportFormat::kSvg) return render_svg(rows, digits);

  const bool with_sweep =
      std::any_of(rows.begin(), rows.end(),
                  [](const ReportRow& r) { return r.sweep.has_value(); });
  std::vector<std::string> header(std::begin(kScoreColumns),
                                  std::end(kScoreColumns));
  if (with_sweep) {
    header.insert(header.end(), std::begin(kSweepColumns),
                  std::end(kSweepColumns));
  }
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const ReportRow& row : rows) {
    std::vector<std::string> c;
    c.push_back(row.system);
    c.push_back(measure_name(row.measure.kind));
    c.push_back(tau_cell(row.measure));
    c.push_back(averaging_name(row.averaging));
    c.push_back(row.group);
    c.push_back(format_decimal(row.prf.precision, digits));
    c.push_back(format_decimal(row.prf.recall, digits));
    c.push_back(format_decimal(row.prf.f, digits));
    c.push_back(std::to_string(row.n_segments));
    c.push_back(std::to_string(row.n_hyp_spans));
    c.push_back(std::to_string(row.n_gold_spans));
    if (with_sweep) {
      if (row.sweep) {
        c.push_back(row.sweep->param);
        c.push_back(format_decimal(row.sweep->p_min, digits));
        c.push_back(format_decimal(row.sweep->p_max, digits));
        c.push_back(format_decimal(row.sweep->r_min, digits));
        c.push_back(format_decimal(row.sweep->r_max, digits));
        c.push_back(format_decimal(row.sweep->f_min, digits));
        c.push_back(format_decimal(row.sweep->f_max, digits));
      } else {
        c.insert(c.end(), 7, "");
      }
    }
    cells.push_back(std::move(c));
  }
  if (format == ReportFormat::kTable) return render_table(header, cells);
  return render_delimited(header, cells, format == ReportFormat::kCsv ? ',' : '\t');
}

std::vector<RankRow> rank_systems(const std::vector<ReportRow>& rows) {
  // group rows by measure + averaging, preserving measure order
  std::vector<std::pair<MeasureConfig, Averaging>> keys;
  std::vector<std::vector<const ReportRow*>> buckets;
  for (const ReportRow& row : rows) {
    const std::pair<MeasureConfig, Averaging> key{row.measure, row.averaging};
    size_t at = keys.size();
    for (size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == key) {
        at = i;
        break;
      }
    }
    if (at == keys.size()) {
      keys.push_back(key);
      buckets.emplace_back();
    }
    buckets[at].push_back(&row);
  }

  std::vector<RankRow> out;
  for (size_t i = 0; i < keys.size(); ++i) {
    auto& bucket = buckets[i];
    std::sort(bucket.begin(), bucket.end(),
              [](const ReportRow* a, const ReportRow* b) {
                if (a->prf.f != b->prf.f) return a->prf.f > b->prf.f;
                if (a->prf.precision != b->prf.precision) {
                  return a->prf.precision > b->prf.precision;
                }
                return a->system < b->system;
              });
    uint32_t rank = 0;
    for (const ReportRow* row : bucket) {
      RankRow r;
      r.measure = keys[i].first;
      r.averaging = keys[i].second;
      r.rank = ++rank;
      r.system = row->system;
      r.prf = row->prf;
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::string emit_ranking(std::vector<RankRow> rows, ReportFormat format,
                         int digits) {
  if (rows.empty()) throw DataError("nothing to report");
  if (format == ReportFormat::kSvg) {
    throw ConfigError("svg output is only defined for sweep results");
  }
  std::sort(rows.begin(), rows.end(), [](const RankRow& a, const RankRow& b) {
    if (a.measure.kind != b.measure.kind) {
      return static_cast<int>(a.measure.kind) <
             static_cast<int>(b.measure.kind);
    }
    if (a.measure.tau != b.measure.tau) return a.measure.tau < b.measure.tau;
    if (a.averaging != b.averaging) {
      return static_cast<int>(a.averaging) < static_cast<int>(b.averaging);
    }
    return a.rank < b.rank;
  });
  const std::vector<std::string> header(std::begin(kRankColumns),
                                        std::end(kRankColumns));
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const RankRow& row : rows) {
    std::vector<std::string> c;
    c.push_back(measure_name(row.measure.kind));
    c.push_back(tau_cell(row.measure));
    c.push_back(averaging_name(row.averaging));
    c.push_back(std::to_string(row.rank));
    c.push_back(row.system);
    c.push_back(format_decimal(row.prf.precision, digits));
    c.push_back(format_decimal(row.prf.recall, digits));
    c.push_back(format_decimal(row.prf.f, digits));
    cells.push_back(std::move(c));
  }
  if (format == ReportFormat::kTable) return render_table(header, cells);
  return render_delimited(header, cells, format == ReportFormat::kCsv ? ',' : '\t');
}

}  // namespace spanscore
