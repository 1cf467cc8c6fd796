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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "iris/date.hpp"
#include "iris/model.hpp"

namespace iris {

/// Column order of every output.
enum class Metric : std::uint8_t { LOC, NOP, NOC, NOI, NOA, NOM, NOL, NOID, NOPM, NOSM, NOIR, NOAA, NOMI };

inline constexpr std::size_t kMetricCount = 13;

inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::LOC,  Metric::NOP,  Metric::NOC,  Metric::NOI,  Metric::NOA,  Metric::NOM, Metric::NOL,
    Metric::NOID, Metric::NOPM, Metric::NOSM, Metric::NOIR, Metric::NOAA, Metric::NOMI};

std::string_view metric_name(Metric m);
std::string_view metric_description(Metric m);
std::optional<Metric> metric_from_name(std::string_view name);

/// NOIR, NOAA, NOMI.
bool is_complexity_metric(Metric m);

struct MetricsVector {
  std::string release_name;
  Date release_date;
  std::array<std::uint64_t, kMetricCount> values{};

  std::uint64_t& operator[](Metric m) { return values[static_cast<std::size_t>(m)]; }
  std::uint64_t operator[](Metric m) const { return values[static_cast<std::size_t>(m)]; }

  friend bool operator==(const MetricsVector&, const MetricsVector&) = default;
};

enum class InheritanceMode : std::uint8_t { All, ExtendsOnly };
enum class DependencyScope : std::uint8_t { All, CrossClass };

struct MetricsConfig {
  InheritanceMode inheritance = InheritanceMode::All;
  DependencyScope scope = DependencyScope::All;
  bool include_constructors = true;
  bool new_as_invocation = false;

  friend bool operator==(const MetricsConfig&, const MetricsConfig&) = default;
};

std::string_view to_string(InheritanceMode mode);
std::string_view to_string(DependencyScope scope);
std::optional<InheritanceMode> inheritance_mode_from_string(std::string_view s);
std::optional<DependencyScope> dependency_scope_from_string(std::string_view s);

/// Fills NOP, NOC, NOI, NOA, NOM, NOL, NOPM and NOSM. Other columns stay 0.
MetricsVector count_declarations(const VariantModel& model, const MetricsConfig& cfg = {});

std::uint64_t count_inheritance_relations(const VariantModel& model, InheritanceMode mode);

std::uint64_t count_attribute_accesses(const VariantModel& model, DependencyScope scope);

/// Constructor calls are added only when `new_as_invocation` is set.
std::uint64_t count_method_invocations(const VariantModel& model, DependencyScope scope,
                                       bool new_as_invocation = false);

/// All 13 metrics. LOC sums every unit, including ones that failed to parse.
/// NOID is NOP + NOC + NOA + NOM.
MetricsVector compute_metrics(const VariantModel& model, const MetricsConfig& cfg = {});

}  // namespace iris
