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

#include <string>
#include <vector>

#include "iris/evolution.hpp"
#include "iris/manifest.hpp"
#include "iris/source.hpp"

namespace iris {

struct AnalyzeOptions {
  unsigned jobs = 1;     // releases analyzed at once
  bool strict = false;   // a file that fails to parse fails the run
  ScanOptions scan;
};

struct ReleaseDiagnostic {
  std::string release;
  Diagnostic diagnostic;

  friend bool operator==(const ReleaseDiagnostic&, const ReleaseDiagnostic&) = default;
};

struct ReleaseTiming {
  std::string release;
  double ms = 0;
};

struct RunResult {
  MetricsMatrix matrix;
  std::vector<ReleaseDiagnostic> diagnostics;  // release order, then file order
  std::vector<ReleaseTiming> timing;
  double total_ms = 0;
};

/// Scan, parse, link and count one release.
MetricsVector analyze_release(const ReleaseEntry& release, const MetricsConfig& cfg, const AnalyzeOptions& options,
                              std::vector<Diagnostic>* diagnostics = nullptr);

/// Runs every release of the manifest, up to `options.jobs` at a time, and
/// merges results in manifest order. Throws StrictParseError in strict mode
/// and InputError for unreadable release roots; when several releases fail,
/// the first one in manifest order wins.
RunResult run_analysis(const Manifest& manifest, const AnalyzeOptions& options = {});

}  // namespace iris
