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

// Release-by-metric matrix, per-metric trends and the growth/complexity
// verdict.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iris/metrics.hpp"

namespace iris {

/// Rows in release order. Never re-sorted.
struct MetricsMatrix {
  std::vector<MetricsVector> rows;

  std::vector<std::uint64_t> column(Metric m) const;

  friend bool operator==(const MetricsMatrix&, const MetricsMatrix&) = default;
};

/// Throws InputError on an empty list.
MetricsMatrix build_matrix(std::vector<MetricsVector> vectors);

enum class TrendClass : std::uint8_t {
  Constant,
  StrictlyIncreasing,
  NonDecreasing,
  StrictlyDecreasing,
  NonIncreasing,
  Fluctuating,
};

std::string_view to_string(TrendClass t);

/// Throws InsufficientReleasesError for fewer than two values.
TrendClass classify_trend(std::span<const std::uint64_t> series);

struct MetricTrend {
  Metric metric = Metric::LOC;
  TrendClass trend = TrendClass::Constant;
  std::vector<std::int64_t> deltas;  // row i+1 minus row i
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  std::int64_t net_change = 0;  // last minus first

  friend bool operator==(const MetricTrend&, const MetricTrend&) = default;
};

struct TrendReport {
  std::array<MetricTrend, kMetricCount> metrics;

  const MetricTrend& operator[](Metric m) const { return metrics[static_cast<std::size_t>(m)]; }

  friend bool operator==(const TrendReport&, const TrendReport&) = default;
};

/// Throws InsufficientReleasesError for fewer than two rows.
TrendReport analyze_evolution(const MetricsMatrix& matrix);

struct HypothesisVerdict {
  bool complexity_supported = false;
  bool growth_supported = false;
  bool change_detected = false;
  std::vector<std::string> evidence;  // one line per metric

  friend bool operator==(const HypothesisVerdict&, const HypothesisVerdict&) = default;
};

/// A group is supported when no member shrank from first to last release
/// and at least one grew.
HypothesisVerdict evaluate_hypothesis(const TrendReport& report);

/// "complexity: supported; growth: supported; change: detected"
std::string verdict_line(const HypothesisVerdict& verdict);

struct CommonalityReport {
  std::vector<Metric> common_metrics;   // constant column
  std::vector<Metric> varying_metrics;

  friend bool operator==(const CommonalityReport&, const CommonalityReport&) = default;
};

CommonalityReport commonality_report(const MetricsMatrix& matrix);

}  // namespace iris
