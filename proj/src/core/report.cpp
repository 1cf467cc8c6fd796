// Copyright 2026 The Iris Authors. All rights reserved.
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

#include "iris/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "iris/errors.hpp"

namespace iris {

namespace {

using nlohmann::ordered_json;

constexpr std::string_view kHeader = "variant,date,LOC,NOP,NOC,NOI,NOA,NOM,NOL,NOID,NOPM,NOSM,NOIR,NOAA,NOMI";

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one CSV record. Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> split_csv(std::string_view line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  if (quoted) return std::nullopt;
  return cells;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

ordered_json matrix_json(const MetricsMatrix& matrix) {
  ordered_json columns = ordered_json::array();
  for (Metric m : kAllMetrics) columns.push_back(metric_name(m));
  ordered_json rows = ordered_json::array();
  for (const MetricsVector& v : matrix.rows) {
    ordered_json row;
    row["variant"] = v.release_name;
    row["date"] = v.release_date.iso();
    for (Metric m : kAllMetrics) row[std::string(metric_name(m))] = v[m];
    rows.push_back(std::move(row));
  }
  ordered_json out;
  out["columns"] = std::move(columns);
  out["rows"] = std::move(rows);
  return out;
}

ordered_json metric_list(const std::vector<Metric>& metrics) {
  ordered_json out = ordered_json::array();
  for (Metric m : metrics) out.push_back(metric_name(m));
  return out;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string fixed(double x, int decimals = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, x);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

// Smallest 1/2/5 x 10^k that is >= x.
std::uint64_t nice_ceiling(std::uint64_t x) {
  if (x <= 1) return 1;
  std::uint64_t scale = 1;
  while (true) {
    for (std::uint64_t step : {1, 2, 5}) {
      if (step * scale >= x) return step * scale;
    }
    scale *= 10;
  }
}

}  // namespace

std::string_view matrix_csv_header() { return kHeader; }

std::string matrix_to_csv(const MetricsMatrix& matrix) {
  std::string out(kHeader);
  out += '\n';
  for (const MetricsVector& v : matrix.rows) {
    out += csv_field(v.release_name);
    out += ',';
    out += v.release_date.iso();
    for (Metric m : kAllMetrics) {
      out += ',';
      out += std::to_string(v[m]);
    }
    out += '\n';
  }
  return out;
}

MetricsMatrix matrix_from_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw InputError("matrix CSV is empty");
  std::string_view header = lines.front();
  if (header.substr(0, 3) == "\xEF\xBB\xBF") header.remove_prefix(3);
  if (header != kHeader) throw InputError("matrix CSV line 1: expected header \"" + std::string(kHeader) + "\"");

  std::vector<MetricsVector> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::string where = "matrix CSV line " + std::to_string(i + 1) + ": ";
    auto cells = split_csv(lines[i]);
    if (!cells) throw InputError(where + "unterminated quote");
    if (cells->size() != 2 + kMetricCount)
      throw InputError(where + "expected " + std::to_string(2 + kMetricCount) + " cells, got " +
                       std::to_string(cells->size()));
    MetricsVector v;
    v.release_name = (*cells)[0];
    if (v.release_name.empty()) throw InputError(where + "empty variant name");
    const std::string date = trim((*cells)[1]);
    if (!date.empty()) {
      auto parsed = Date::parse_iso(date);
      if (!parsed) throw InputError(where + "bad date \"" + date + "\"");
      v.release_date = *parsed;
    }
    for (std::size_t c = 0; c < kMetricCount; ++c) {
      const Metric m = kAllMetrics[c];
      const std::string cell = trim((*cells)[c + 2]);
      if (cell.empty()) {
        if (m == Metric::NOL) continue;
        throw InputError(where + "empty " + std::string(metric_name(m)) + " cell");
      }
      if (!std::all_of(cell.begin(), cell.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) || cell.size() > 18)
        throw InputError(where + "bad " + std::string(metric_name(m)) + " value \"" + cell + "\"");
      v[m] = std::stoull(cell);
    }
    rows.push_back(std::move(v));
  }
  if (rows.empty()) throw InputError("matrix CSV has no rows");
  return build_matrix(std::move(rows));
}

std::string matrix_to_json(const MetricsMatrix& matrix) { return dump(matrix_json(matrix)); }

std::string report_to_json(const MetricsMatrix& matrix, const std::vector<ReleaseDiagnostic>& diagnostics,
                           const MetricsConfig& config) {
  ordered_json out;
  ordered_json cfg;
  cfg["inheritance"] = to_string(config.inheritance);
  cfg["scope"] = to_string(config.scope);
  cfg["constructors"] = config.include_constructors ? "include" : "exclude";
  cfg["newAsInvocation"] = config.new_as_invocation;
  out["config"] = std::move(cfg);
  out["matrix"] = matrix_json(matrix);

  if (matrix.rows.size() >= 2) {
    const TrendReport report = analyze_evolution(matrix);
    ordered_json trends;
    for (const MetricTrend& t : report.metrics) {
      ordered_json entry;
      entry["trend"] = to_string(t.trend);
      entry["first"] = t.first;
      entry["last"] = t.last;
      entry["net_change"] = t.net_change;
      entry["deltas"] = t.deltas;
      trends[std::string(metric_name(t.metric))] = std::move(entry);
    }
    out["trends"] = std::move(trends);
    const HypothesisVerdict v = evaluate_hypothesis(report);
    ordered_json verdict;
    verdict["complexity_supported"] = v.complexity_supported;
    verdict["growth_supported"] = v.growth_supported;
    verdict["change_detected"] = v.change_detected;
    verdict["summary"] = verdict_line(v);
    verdict["evidence"] = v.evidence;
    out["verdict"] = std::move(verdict);
  } else {
    out["trends"] = nullptr;
    out["verdict"] = nullptr;
  }

  const CommonalityReport common = commonality_report(matrix);
  ordered_json commonality;
  commonality["common"] = metric_list(common.common_metrics);
  commonality["varying"] = metric_list(common.varying_metrics);
  out["commonality"] = std::move(commonality);

  ordered_json diags = ordered_json::array();
  for (const ReleaseDiagnostic& rd : diagnostics) {
    ordered_json d;
    d["release"] = rd.release;
    d["kind"] = to_string(rd.diagnostic.kind);
    d["file"] = rd.diagnostic.file;
    d["line"] = rd.diagnostic.line;
    d["column"] = rd.diagnostic.column;
    d["message"] = rd.diagnostic.message;
    diags.push_back(std::move(d));
  }
  out["diagnostics"] = std::move(diags);
  return dump(out);
}

std::string timing_to_json(const std::vector<ReleaseTiming>& timing, double total_ms) {
  ordered_json releases = ordered_json::array();
  for (const ReleaseTiming& t : timing) {
    ordered_json r;
    r["release"] = t.release;
    r["ms"] = std::round(t.ms * 1000.0) / 1000.0;
    releases.push_back(std::move(r));
  }
  ordered_json out;
  out["releases"] = std::move(releases);
  out["total_ms"] = std::round(total_ms * 1000.0) / 1000.0;
  return dump(out);
}

std::string chart_svg(const MetricsMatrix& matrix, Metric metric) {
  const std::size_t n = matrix.rows.size();
  if (n < 2) throw InsufficientReleasesError("charts need at least 2 releases, got " + std::to_string(n));
  constexpr double kWidth = 640, kHeight = 360;
  constexpr double kLeft = 80, kRight = 24, kTop = 48, kBottom = 72;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  const std::vector<std::uint64_t> values = matrix.column(metric);
  const std::uint64_t y_max = nice_ceiling(*std::max_element(values.begin(), values.end()));
  auto x_at = [&](std::size_t i) { return kLeft + plot_w * static_cast<double>(i) / static_cast<double>(n - 1); };
  auto y_at = [&](std::uint64_t v) {
    return kTop + plot_h * (1.0 - static_cast<double>(v) / static_cast<double>(y_max));
  };

  const std::string name(metric_name(metric));
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"360\" viewBox=\"0 0 640 360\" "
       "font-family=\"sans-serif\" font-size=\"11\">\n";
  s += "<title>" + name + " by release</title>\n";
  s += "<rect x=\"0\" y=\"0\" width=\"640\" height=\"360\" fill=\"#ffffff\"/>\n";
  s += "<text x=\"320\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" + name + " (" +
       xml_escape(metric_description(metric)) + ")</text>\n";

  for (int k = 0; k <= 4; ++k) {
    const double value = static_cast<double>(y_max) * k / 4.0;
    const double y = kTop + plot_h * (1.0 - k / 4.0);
    s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(y) + "\" x2=\"" + fixed(kLeft + plot_w) + "\" y2=\"" +
         fixed(y) + "\" stroke=\"#dddddd\"/>\n";
    s += "<text x=\"" + fixed(kLeft - 6) + "\" y=\"" + fixed(y + 4) + "\" text-anchor=\"end\">" +
         fixed(value, y_max < 4 ? 2 : 0) + "</text>\n";
  }
  s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" + fixed(kLeft + plot_w) +
       "\" y2=\"" + fixed(kTop + plot_h) + "\" stroke=\"#333333\"/>\n";
  s += "<line x1=\"" + fixed(kLeft) + "\" y1=\"" + fixed(kTop) + "\" x2=\"" + fixed(kLeft) + "\" y2=\"" +
       fixed(kTop + plot_h) + "\" stroke=\"#333333\"/>\n";

  std::string points;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) points += ' ';
    points += fixed(x_at(i)) + "," + fixed(y_at(values[i]));
  }
  s += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"2\" points=\"" + points + "\"/>\n";
  for (std::size_t i = 0; i < n; ++i) {
    const std::string x = fixed(x_at(i));
    const std::string y = fixed(y_at(values[i]));
    s += "<circle cx=\"" + x + "\" cy=\"" + y + "\" r=\"3\" fill=\"#1f77b4\"><title>" +
         xml_escape(matrix.rows[i].release_name) + ": " + std::to_string(values[i]) + "</title></circle>\n";
    s += "<text x=\"" + x + "\" y=\"" + fixed(kTop + plot_h + 18) + "\" text-anchor=\"middle\">" +
         xml_escape(matrix.rows[i].release_name) + "</text>\n";
  }
  s += "<text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" + fixed(kHeight - 16) +
       "\" text-anchor=\"middle\">release</text>\n";
  s += "</svg>\n";
  return s;
}

std::vector<std::filesystem::path> emit_charts(const MetricsMatrix& matrix, const std::filesystem::path& out_dir) {
  if (matrix.rows.size() < 2)
    throw InsufficientReleasesError("charts need at least 2 releases, got " + std::to_string(matrix.rows.size()));
  std::vector<std::filesystem::path> files;
  for (Metric m : kAllMetrics) {
    std::filesystem::path file = out_dir / "charts" / (std::string(metric_name(m)) + ".svg");
    write_file(file, chart_svg(matrix, m));
    files.push_back(std::move(file));
  }
  return files;
}

std::string summary_table(const MetricsMatrix& matrix) {
  std::vector<std::vector<std::string>> table;
  std::vector<std::string> header{"variant", "date"};
  for (Metric m : kAllMetrics) header.emplace_back(metric_name(m));
  table.push_back(std::move(header));
  for (const MetricsVector& v : matrix.rows) {
    std::vector<std::string> row{v.release_name, v.release_date.known() ? v.release_date.iso() : "-"};
    for (Metric m : kAllMetrics) row.push_back(std::to_string(v[m]));
    table.push_back(std::move(row));
  }
  std::vector<std::size_t> width(table.front().size(), 0);
  for (const auto& row : table)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : table) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      out += c < 2 ? row[c] + pad : pad + row[c];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += '\n';
  }
  return out;
}

std::string trends_text(const HypothesisVerdict& verdict) {
  std::string out;
  for (const std::string& line : verdict.evidence) out += "  " + line + "\n";
  out += verdict_line(verdict) + "\n";
  return out;
}

void write_file(const std::filesystem::path& file, std::string_view bytes) {
  std::error_code ec;
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path(), ec);
  if (ec) throw OutputError("cannot create directory " + file.parent_path().string() + ": " + ec.message());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw OutputError("cannot write " + file.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw OutputError("cannot write " + file.string());
}

}  // namespace iris
