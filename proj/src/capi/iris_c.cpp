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

#include "iris/iris.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "iris/errors.hpp"
#include "iris/evolution.hpp"
#include "iris/manifest.hpp"
#include "iris/pipeline.hpp"
#include "iris/report.hpp"

struct iris_manifest {
  iris::Manifest manifest;
};

struct iris_matrix {
  iris::MetricsMatrix matrix;
  iris::MetricsConfig config;
  std::vector<iris::ReleaseDiagnostic> diagnostics;
};

struct iris_run {
  iris_matrix matrix;
  std::vector<iris::ReleaseTiming> timing;
  double total_ms = 0;
};

namespace {

thread_local std::string g_last_error;

iris_status fail(iris_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn and maps exceptions onto status codes.
template <typename Fn>
iris_status guarded(Fn&& fn) {
  try {
    fn();
    return IRIS_OK;
  } catch (const iris::StrictParseError& e) {
    return fail(IRIS_ERR_STRICT_PARSE, e.what());
  } catch (const iris::InputError& e) {
    return fail(IRIS_ERR_INPUT, e.what());
  } catch (const iris::InsufficientReleasesError& e) {
    return fail(IRIS_ERR_INSUFFICIENT_RELEASES, e.what());
  } catch (const iris::OutputError& e) {
    return fail(IRIS_ERR_OUTPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IRIS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IRIS_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IRIS_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

iris_status null_argument(const char* name) {
  return fail(IRIS_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

void write_matrix_outputs(const iris_matrix& m, const std::filesystem::path& dir, unsigned flags) {
  if (flags & IRIS_WRITE_CSV) iris::write_file(dir / "matrix.csv", iris::matrix_to_csv(m.matrix));
  if (flags & IRIS_WRITE_JSON) iris::write_file(dir / "matrix.json", iris::matrix_to_json(m.matrix));
  iris::write_file(dir / "report.json", iris::report_to_json(m.matrix, m.diagnostics, m.config));
  if (flags & IRIS_WRITE_CHARTS) iris::emit_charts(m.matrix, dir);
}

}  // namespace

extern "C" {

const char* iris_version(void) { return "0.1.0"; }

const char* iris_last_error(void) { return g_last_error.c_str(); }

void iris_string_free(char* s) { std::free(s); }

iris_status iris_manifest_load(const char* path, iris_manifest** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] { *out = new iris_manifest{iris::load_manifest(path)}; });
}

size_t iris_manifest_release_count(const iris_manifest* manifest) {
  return manifest ? manifest->manifest.releases.size() : 0;
}

void iris_manifest_free(iris_manifest* manifest) { delete manifest; }

iris_status iris_analyze(const iris_manifest* manifest, const iris_analyze_options* options, iris_run** out) {
  if (!manifest) return null_argument("manifest");
  if (!out) return null_argument("out");
  *out = nullptr;
  iris::AnalyzeOptions opts;
  if (options) {
    opts.jobs = options->jobs == 0 ? 1 : options->jobs;
    opts.strict = options->strict != 0;
  }
  return guarded([&] {
    iris::RunResult result = iris::run_analysis(manifest->manifest, opts);
    auto run = std::make_unique<iris_run>();
    run->matrix.matrix = std::move(result.matrix);
    run->matrix.config = manifest->manifest.config;
    run->matrix.diagnostics = std::move(result.diagnostics);
    run->timing = std::move(result.timing);
    run->total_ms = result.total_ms;
    *out = run.release();
  });
}

void iris_run_free(iris_run* run) { delete run; }

const iris_matrix* iris_run_matrix(const iris_run* run) { return run ? &run->matrix : nullptr; }

size_t iris_run_diagnostic_count(const iris_run* run) { return run ? run->matrix.diagnostics.size() : 0; }

iris_status iris_run_diagnostic(const iris_run* run, size_t index, char** out) {
  if (!run) return null_argument("run");
  if (!out) return null_argument("out");
  if (index >= run->matrix.diagnostics.size())
    return fail(IRIS_ERR_INVALID_ARGUMENT, "diagnostic index " + std::to_string(index) + " out of range");
  return guarded([&] {
    const iris::ReleaseDiagnostic& rd = run->matrix.diagnostics[index];
    const iris::Diagnostic& d = rd.diagnostic;
    *out = dup_string(rd.release + ": " + std::string(iris::to_string(d.kind)) + " " + d.file + ":" +
                      std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.message);
  });
}

iris_status iris_run_timing_json(const iris_run* run, char** out) {
  if (!run) return null_argument("run");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup_string(iris::timing_to_json(run->timing, run->total_ms)); });
}

double iris_run_total_ms(const iris_run* run) { return run ? run->total_ms : 0.0; }

iris_status iris_run_write(const iris_run* run, const char* out_dir, unsigned flags) {
  if (!run) return null_argument("run");
  if (!out_dir) return null_argument("out_dir");
  return guarded([&] {
    const std::filesystem::path dir(out_dir);
    write_matrix_outputs(run->matrix, dir, flags);
    iris::write_file(dir / "timing.json", iris::timing_to_json(run->timing, run->total_ms));
  });
}

iris_status iris_matrix_load_csv(const char* path, iris_matrix** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  *out = nullptr;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw iris::InputError(std::string("cannot read matrix ") + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    iris::MetricsMatrix matrix;
    try {
      matrix = iris::matrix_from_csv(ss.str());
    } catch (const iris::InputError& e) {
      throw iris::InputError(std::string(path) + ": " + e.what());
    }
    *out = new iris_matrix{std::move(matrix), {}, {}};
  });
}

void iris_matrix_free(iris_matrix* matrix) { delete matrix; }

size_t iris_matrix_row_count(const iris_matrix* matrix) { return matrix ? matrix->matrix.rows.size() : 0; }

iris_status iris_matrix_release_name(const iris_matrix* matrix, size_t row, char** out) {
  if (!matrix) return null_argument("matrix");
  if (!out) return null_argument("out");
  if (row >= matrix->matrix.rows.size())
    return fail(IRIS_ERR_INVALID_ARGUMENT, "row " + std::to_string(row) + " out of range");
  return guarded([&] { *out = dup_string(matrix->matrix.rows[row].release_name); });
}

iris_status iris_matrix_value(const iris_matrix* matrix, size_t row, const char* metric, uint64_t* out) {
  if (!matrix) return null_argument("matrix");
  if (!metric) return null_argument("metric");
  if (!out) return null_argument("out");
  if (row >= matrix->matrix.rows.size())
    return fail(IRIS_ERR_INVALID_ARGUMENT, "row " + std::to_string(row) + " out of range");
  auto m = iris::metric_from_name(metric);
  if (!m) return fail(IRIS_ERR_INVALID_ARGUMENT, std::string("unknown metric \"") + metric + "\"");
  *out = matrix->matrix.rows[row][*m];
  return IRIS_OK;
}

iris_status iris_matrix_to_csv(const iris_matrix* matrix, char** out) {
  if (!matrix) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup_string(iris::matrix_to_csv(matrix->matrix)); });
}

iris_status iris_matrix_summary(const iris_matrix* matrix, char** out) {
  if (!matrix) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded([&] { *out = dup_string(iris::summary_table(matrix->matrix)); });
}

iris_status iris_matrix_trends(const iris_matrix* matrix, char** out) {
  if (!matrix) return null_argument("matrix");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = dup_string(iris::trends_text(iris::evaluate_hypothesis(iris::analyze_evolution(matrix->matrix))));
  });
}

iris_status iris_matrix_verdict(const iris_matrix* matrix, int* complexity_supported, int* growth_supported,
                                int* change_detected) {
  if (!matrix) return null_argument("matrix");
  return guarded([&] {
    const iris::HypothesisVerdict v = iris::evaluate_hypothesis(iris::analyze_evolution(matrix->matrix));
    if (complexity_supported) *complexity_supported = v.complexity_supported;
    if (growth_supported) *growth_supported = v.growth_supported;
    if (change_detected) *change_detected = v.change_detected;
  });
}

iris_status iris_matrix_write(const iris_matrix* matrix, const char* out_dir, unsigned flags) {
  if (!matrix) return null_argument("matrix");
  if (!out_dir) return null_argument("out_dir");
  return guarded([&] { write_matrix_outputs(*matrix, out_dir, flags); });
}

}  // extern "C"
