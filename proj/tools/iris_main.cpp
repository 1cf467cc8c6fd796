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

// iris: mines object-oriented metrics from a series of releases.
//
//   iris analyze --manifest <file> --out <dir> [--format csv,json] [--charts] [--jobs N] [--strict]
//   iris trends --matrix <csv> [--out <dir>]
//
// Exit codes: 0 success, 1 strict-mode parse failure, 2 bad input or output.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "iris/iris.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitStrict = 1;
constexpr int kExitInput = 2;

bool use_color() {
  const char* no_color = std::getenv("NO_COLOR");
  if (no_color && *no_color) return false;
  return isatty(fileno(stdout)) != 0;
}

std::string paint(const std::string& text, const char* code) {
  if (!use_color()) return text;
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

int report_error(iris_status status) {
  std::cerr << paint("error:", "31") << " " << iris_last_error() << "\n";
  return status == IRIS_ERR_STRICT_PARSE ? kExitStrict : kExitInput;
}

// Takes ownership of a string from the library.
std::string take(char* s) {
  std::string out = s ? s : "";
  iris_string_free(s);
  return out;
}

// Prints the evidence lines and a colored verdict line.
int print_trends(const iris_matrix* matrix) {
  char* text = nullptr;
  if (iris_status st = iris_matrix_trends(matrix, &text); st != IRIS_OK) return report_error(st);
  std::string body = take(text);
  std::string::size_type cut = body.rfind('\n', body.size() - 2);
  std::string evidence = cut == std::string::npos ? "" : body.substr(0, cut + 1);
  std::string verdict = body.substr(cut == std::string::npos ? 0 : cut + 1);
  if (!verdict.empty() && verdict.back() == '\n') verdict.pop_back();
  std::cout << "trends:\n" << evidence;
  int complexity = 0, growth = 0;
  iris_matrix_verdict(matrix, &complexity, &growth, nullptr);
  std::cout << paint(verdict, complexity && growth ? "32" : "33") << "\n";
  return kExitOk;
}

struct AnalyzeArgs {
  std::string manifest;
  std::string out;
  std::vector<std::string> formats{"csv"};
  bool charts = false;
  unsigned jobs = 1;
  bool strict = false;
};

int run_analyze(const AnalyzeArgs& args) {
  unsigned flags = 0;
  for (const std::string& f : args.formats) {
    if (f == "csv") {
      flags |= IRIS_WRITE_CSV;
    } else if (f == "json") {
      flags |= IRIS_WRITE_JSON;
    } else {
      std::cerr << paint("error:", "31") << " unknown format \"" << f << "\" (expected csv or json)\n";
      return kExitInput;
    }
  }

  iris_manifest* manifest = nullptr;
  if (iris_status st = iris_manifest_load(args.manifest.c_str(), &manifest); st != IRIS_OK) return report_error(st);
  iris_analyze_options options{args.jobs, args.strict ? 1 : 0};
  iris_run* run = nullptr;
  iris_status st = iris_analyze(manifest, &options, &run);
  iris_manifest_free(manifest);
  if (st != IRIS_OK) return report_error(st);

  const iris_matrix* matrix = iris_run_matrix(run);
  const bool several = iris_matrix_row_count(matrix) >= 2;
  if (args.charts) {
    if (several) {
      flags |= IRIS_WRITE_CHARTS;
    } else {
      std::cerr << paint("warning:", "33") << " charts need at least 2 releases; skipped\n";
    }
  }

  for (size_t i = 0; i < iris_run_diagnostic_count(run); ++i) {
    char* line = nullptr;
    if (iris_run_diagnostic(run, i, &line) == IRIS_OK) std::cerr << paint("warning:", "33") << " " << take(line) << "\n";
  }

  int code = kExitOk;
  if (st = iris_run_write(run, args.out.c_str(), flags); st != IRIS_OK) {
    code = report_error(st);
  } else {
    char* summary = nullptr;
    if (iris_matrix_summary(matrix, &summary) == IRIS_OK) std::cout << take(summary);
    if (several) code = print_trends(matrix);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", iris_run_total_ms(run));
    std::cout << "analyzed " << iris_matrix_row_count(matrix) << " release(s) in " << buf << " ms\n";
    std::cout << "outputs written to " << args.out << "\n";
  }
  iris_run_free(run);
  return code;
}

int run_trends(const std::string& matrix_path, const std::string& out) {
  iris_matrix* matrix = nullptr;
  if (iris_status st = iris_matrix_load_csv(matrix_path.c_str(), &matrix); st != IRIS_OK) return report_error(st);
  char* summary = nullptr;
  if (iris_matrix_summary(matrix, &summary) == IRIS_OK) std::cout << take(summary);
  int code = print_trends(matrix);
  if (code == kExitOk && !out.empty()) {
    if (iris_status st = iris_matrix_write(matrix, out.c_str(), IRIS_WRITE_CSV | IRIS_WRITE_CHARTS); st != IRIS_OK)
      code = report_error(st);
  }
  iris_matrix_free(matrix);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine object-oriented metrics across software releases"};
  app.set_version_flag("--version", iris_version());
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Analyze every release listed in a manifest");
  analyze_cmd->add_option("--manifest", analyze.manifest, "Manifest JSON file")->required();
  analyze_cmd->add_option("--out", analyze.out, "Output directory")->required();
  analyze_cmd->add_option("--format", analyze.formats, "Matrix formats: csv, json")->delimiter(',');
  analyze_cmd->add_flag("--charts", analyze.charts, "Write one SVG chart per metric");
  analyze_cmd->add_option("--jobs", analyze.jobs, "Releases analyzed in parallel")->check(CLI::Range(1u, 1024u));
  analyze_cmd->add_flag("--strict", analyze.strict, "Fail when a source file does not parse");

  std::string matrix_path, trends_out;
  CLI::App* trends_cmd = app.add_subcommand("trends", "Classify trends from a matrix CSV");
  trends_cmd->add_option("--matrix", matrix_path, "Matrix CSV file")->required();
  trends_cmd->add_option("--out", trends_out, "Write report.json, matrix.csv and charts here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (analyze_cmd->parsed()) return run_analyze(analyze);
    return run_trends(matrix_path, trends_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
