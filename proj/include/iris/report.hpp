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

// Output formats: matrix CSV and JSON, the run report, timing, SVG charts
// and the terminal summary. Everything except timing is byte-deterministic.

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iris/evolution.hpp"
#include "iris/pipeline.hpp"

namespace iris {

/// Header line of the matrix CSV, without the newline.
std::string_view matrix_csv_header();

/// Header plus one row per release, LF line endings.
std::string matrix_to_csv(const MetricsMatrix& matrix);

/// Inverse of matrix_to_csv. A blank NOL cell reads as 0 so hand-made
/// fixtures may leave it out; any other blank or malformed cell throws
/// InputError naming the line.
MetricsMatrix matrix_from_csv(std::string_view text);

std::string matrix_to_json(const MetricsMatrix& matrix);

/// matrix, trends, verdict, commonality and diagnostics. Trends and verdict
/// are null for a single release.
std::string report_to_json(const MetricsMatrix& matrix, const std::vector<ReleaseDiagnostic>& diagnostics,
                           const MetricsConfig& config);

std::string timing_to_json(const std::vector<ReleaseTiming>& timing, double total_ms);

/// One SVG line chart. Throws InsufficientReleasesError below two rows.
std::string chart_svg(const MetricsMatrix& matrix, Metric metric);

/// Writes charts/<METRIC>.svg for all 13 metrics and returns the paths.
std::vector<std::filesystem::path> emit_charts(const MetricsMatrix& matrix, const std::filesystem::path& out_dir);

/// Aligned text table, one row per release.
std::string summary_table(const MetricsMatrix& matrix);

/// Per-metric evidence lines followed by the verdict line.
std::string trends_text(const HypothesisVerdict& verdict);

/// Writes `bytes` to `file`, creating parent directories. Throws OutputError.
void write_file(const std::filesystem::path& file, std::string_view bytes);

}  // namespace iris
