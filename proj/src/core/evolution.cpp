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

#include "iris/evolution.hpp"

#include <algorithm>

#include "iris/errors.hpp"

namespace iris {

std::vector<std::uint64_t> MetricsMatrix::column(Metric m) const {
  std::vector<std::uint64_t> out;
  out.reserve(rows.size());
  for (const MetricsVector& row : rows) out.push_back(row[m]);
  return out;
}

MetricsMatrix build_matrix(std::vector<MetricsVector> vectors) {
  if (vectors.empty()) throw InputError("empty manifest: no releases to put in the matrix");
  return MetricsMatrix{std::move(vectors)};
}

std::string_view to_string(TrendClass t) {
  switch (t) {
    case TrendClass::Constant:
      return "constant";
    case TrendClass::StrictlyIncreasing:
      return "strictly-increasing";
    case TrendClass::NonDecreasing:
      return "non-decreasing";
    case TrendClass::StrictlyDecreasing:
      return "strictly-decreasing";
    case TrendClass::NonIncreasing:
      return "non-increasing";
    case TrendClass::Fluctuating:
      return "fluctuating";
  }
  return "fluctuating";
}

TrendClass classify_trend(std::span<const std::uint64_t> series) {
  if (series.size() < 2)
    throw InsufficientReleasesError("trend needs at least 2 releases, got " + std::to_string(series.size()));
  std::size_t up = 0, down = 0, flat = 0;
  for (std::size_t i = 1; i < series.size(); ++i) {
    if (series[i] > series[i - 1]) {
      ++up;
    } else if (series[i] < series[i - 1]) {
      ++down;
    } else {
      ++flat;
    }
  }
  if (up == 0 && down == 0) return TrendClass::Constant;
  if (down == 0) return flat == 0 ? TrendClass::StrictlyIncreasing : TrendClass::NonDecreasing;
  if (up == 0) return flat == 0 ? TrendClass::StrictlyDecreasing : TrendClass::NonIncreasing;
  return TrendClass::Fluctuating;
}

TrendReport analyze_evolution(const MetricsMatrix& matrix) {
  if (matrix.rows.size() < 2)
    throw InsufficientReleasesError("evolution analysis needs at least 2 releases, got " +
                                    std::to_string(matrix.rows.size()));
  TrendReport report;
  for (Metric m : kAllMetrics) {
    std::vector<std::uint64_t> col = matrix.column(m);
    MetricTrend& t = report.metrics[static_cast<std::size_t>(m)];
    t.metric = m;
    t.trend = classify_trend(col);
    for (std::size_t i = 1; i < col.size(); ++i)
      t.deltas.push_back(static_cast<std::int64_t>(col[i]) - static_cast<std::int64_t>(col[i - 1]));
    t.first = col.front();
    t.last = col.back();
    t.net_change = static_cast<std::int64_t>(col.back()) - static_cast<std::int64_t>(col.front());
  }
  return report;
}

HypothesisVerdict evaluate_hypothesis(const TrendReport& report) {
  HypothesisVerdict v;
  bool complexity_shrank = false, complexity_grew = false;
  bool growth_shrank = false, growth_grew = false;
  for (const MetricTrend& t : report.metrics) {
    bool& shrank = is_complexity_metric(t.metric) ? complexity_shrank : growth_shrank;
    bool& grew = is_complexity_metric(t.metric) ? complexity_grew : growth_grew;
    if (t.net_change < 0) shrank = true;
    if (t.net_change > 0) grew = true;
    if (std::any_of(t.deltas.begin(), t.deltas.end(), [](std::int64_t d) { return d != 0; })) v.change_detected = true;
    std::string sign = t.net_change > 0 ? "+" : "";
    v.evidence.push_back(std::string(metric_name(t.metric)) + ": " + std::to_string(t.first) + " -> " +
                         std::to_string(t.last) + " (" + sign + std::to_string(t.net_change) + "), " +
                         std::string(to_string(t.trend)));
  }
  v.complexity_supported = complexity_grew && !complexity_shrank;
  v.growth_supported = growth_grew && !growth_shrank;
  return v;
}

std::string verdict_line(const HypothesisVerdict& verdict) {
  std::string s = "complexity: ";
  s += verdict.complexity_supported ? "supported" : "unsupported";
  s += "; growth: ";
  s += verdict.growth_supported ? "supported" : "unsupported";
  s += "; change: ";
  s += verdict.change_detected ? "detected" : "none";
  return s;
}

CommonalityReport commonality_report(const MetricsMatrix& matrix) {
  CommonalityReport r;
  for (Metric m : kAllMetrics) {
    std::vector<std::uint64_t> col = matrix.column(m);
    const bool constant = std::all_of(col.begin(), col.end(), [&](std::uint64_t x) { return x == col.front(); });
    (constant ? r.common_metrics : r.varying_metrics).push_back(m);
  }
  return r;
}

}  // namespace iris
