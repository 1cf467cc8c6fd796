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

/* C interface to the Iris metrics miner.
 *
 * Every function that can fail returns an iris_status. On failure the
 * message is available from iris_last_error() on the same thread until the
 * next failing call. Strings returned through char** are owned by the
 * caller and released with iris_string_free(). */

#ifndef IRIS_IRIS_H_
#define IRIS_IRIS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(IRIS_BUILDING_LIBRARY)
#define IRIS_API __declspec(dllexport)
#else
#define IRIS_API __declspec(dllimport)
#endif
#else
#define IRIS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iris_status {
  IRIS_OK = 0,
  IRIS_ERR_INVALID_ARGUMENT = 1,
  IRIS_ERR_INPUT = 2,                  /* manifest, release tree or matrix file */
  IRIS_ERR_STRICT_PARSE = 3,           /* strict mode and a file did not parse */
  IRIS_ERR_INSUFFICIENT_RELEASES = 4,  /* trends or charts with one release */
  IRIS_ERR_OUTPUT = 5,
  IRIS_ERR_INTERNAL = 6
} iris_status;

/* Output selection for the write functions. */
enum {
  IRIS_WRITE_CSV = 1u << 0,    /* matrix.csv */
  IRIS_WRITE_JSON = 1u << 1,   /* matrix.json */
  IRIS_WRITE_CHARTS = 1u << 2  /* charts/<METRIC>.svg */
};

typedef struct iris_manifest iris_manifest;
typedef struct iris_run iris_run;
typedef struct iris_matrix iris_matrix;

typedef struct iris_analyze_options {
  unsigned jobs; /* 0 behaves like 1 */
  int strict;    /* nonzero: a file that fails to parse fails the run */
} iris_analyze_options;

IRIS_API const char* iris_version(void);
IRIS_API const char* iris_last_error(void);
IRIS_API void iris_string_free(char* s);

/* Manifest */
IRIS_API iris_status iris_manifest_load(const char* path, iris_manifest** out);
IRIS_API size_t iris_manifest_release_count(const iris_manifest* manifest);
IRIS_API void iris_manifest_free(iris_manifest* manifest);

/* Analysis */
IRIS_API iris_status iris_analyze(const iris_manifest* manifest, const iris_analyze_options* options, iris_run** out);
IRIS_API void iris_run_free(iris_run* run);
/* Borrowed; lives as long as the run. */
IRIS_API const iris_matrix* iris_run_matrix(const iris_run* run);
IRIS_API size_t iris_run_diagnostic_count(const iris_run* run);
/* "release: kind file:line:column: message" */
IRIS_API iris_status iris_run_diagnostic(const iris_run* run, size_t index, char** out);
IRIS_API iris_status iris_run_timing_json(const iris_run* run, char** out);
IRIS_API double iris_run_total_ms(const iris_run* run);
/* Writes report.json, timing.json and the outputs selected by `flags`. */
IRIS_API iris_status iris_run_write(const iris_run* run, const char* out_dir, unsigned flags);

/* Matrix */
IRIS_API iris_status iris_matrix_load_csv(const char* path, iris_matrix** out);
IRIS_API void iris_matrix_free(iris_matrix* matrix);
IRIS_API size_t iris_matrix_row_count(const iris_matrix* matrix);
IRIS_API iris_status iris_matrix_release_name(const iris_matrix* matrix, size_t row, char** out);
/* `metric` is a column name such as "LOC" or "NOMI". */
IRIS_API iris_status iris_matrix_value(const iris_matrix* matrix, size_t row, const char* metric, uint64_t* out);
IRIS_API iris_status iris_matrix_to_csv(const iris_matrix* matrix, char** out);
IRIS_API iris_status iris_matrix_summary(const iris_matrix* matrix, char** out);
/* Per-metric evidence lines, then the verdict line. */
IRIS_API iris_status iris_matrix_trends(const iris_matrix* matrix, char** out);
IRIS_API iris_status iris_matrix_verdict(const iris_matrix* matrix, int* complexity_supported, int* growth_supported,
                                         int* change_detected);
/* Writes report.json and the outputs selected by `flags`. */
IRIS_API iris_status iris_matrix_write(const iris_matrix* matrix, const char* out_dir, unsigned flags);

#ifdef __cplusplus
}
#endif

#endif /* IRIS_IRIS_H_ */
