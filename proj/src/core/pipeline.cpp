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

#include "iris/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "iris/errors.hpp"
#include "iris/linker.hpp"
#include "iris/parser.hpp"

namespace iris {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

MetricsVector analyze_release(const ReleaseEntry& release, const MetricsConfig& cfg, const AnalyzeOptions& options,
                              std::vector<Diagnostic>* diagnostics) {
  ScanResult scan = scan_variant(release.path, options.scan);
  std::vector<CompilationUnit> units;
  units.reserve(scan.files.size());
  for (const SourceFile& file : scan.files) {
    units.push_back(parse_unit(file));
    const CompilationUnit& unit = units.back();
    if (options.strict && unit.parse_error) {
      const Diagnostic& d = *unit.parse_error;
      throw StrictParseError("release " + release.name + ": " + d.file + ":" + std::to_string(d.line) + ":" +
                             std::to_string(d.column) + ": " + d.message);
    }
  }
  VariantModel model = link_variant(std::move(units), release.name, release.date);
  if (diagnostics) {
    diagnostics->insert(diagnostics->end(), scan.skipped.begin(), scan.skipped.end());
    diagnostics->insert(diagnostics->end(), model.diagnostics.begin(), model.diagnostics.end());
    std::stable_sort(diagnostics->begin(), diagnostics->end(),
                     [](const Diagnostic& a, const Diagnostic& b) { return a.file < b.file; });
  }
  return compute_metrics(model, cfg);
}

RunResult run_analysis(const Manifest& manifest, const AnalyzeOptions& options) {
  const std::size_t n = manifest.releases.size();
  if (n == 0) throw InputError("manifest lists no releases");

  std::vector<MetricsVector> vectors(n);
  std::vector<std::vector<Diagnostic>> diagnostics(n);
  std::vector<double> ms(n, 0.0);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto start = Clock::now();
      try {
        vectors[i] = analyze_release(manifest.releases[i], manifest.config, options, &diagnostics[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
      ms[i] = ms_since(start);
    }
  };

  const auto start = Clock::now();
  const std::size_t threads = std::clamp<std::size_t>(options.jobs, 1, n);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  RunResult result;
  result.total_ms = ms_since(start);

  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = manifest.releases[i].name;
    for (Diagnostic& d : diagnostics[i]) result.diagnostics.push_back(ReleaseDiagnostic{name, std::move(d)});
    result.timing.push_back(ReleaseTiming{name, ms[i]});
  }
  result.matrix = build_matrix(std::move(vectors));
  return result;
}

}  // namespace iris
