/* Copyright 2026 The spanscore Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* Public C API of libspanscore.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Every fallible call returns a spanscore_status; on failure a human-readable
 * message is available from spanscore_last_error() (thread-local). Strings
 * returned through char** out-parameters are NUL-terminated, UTF-8, and owned
 * by the caller; release them with spanscore_buffer_free().
 */

#ifndef SPANSCORE_H
#define SPANSCORE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SPANSCORE_API __declspec(dllexport)
#else
#define SPANSCORE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spanscore_dataset spanscore_dataset;
typedef struct spanscore_report spanscore_report;

/* Status values double as CLI exit codes. */
typedef enum spanscore_status {
  SPANSCORE_OK = 0,
  SPANSCORE_ERR_USAGE = 1,    /* bad configuration or arguments */
  SPANSCORE_ERR_DATA = 2,     /* unreadable, malformed, or invalid data */
  SPANSCORE_ERR_INTERNAL = 3  /* failed internal check */
} spanscore_status;

SPANSCORE_API const char *spanscore_version(void);

/* Message describing the most recent failure on the calling thread. */
SPANSCORE_API const char *spanscore_last_error(void);

/* ---- datasets ----------------------------------------------------------
 *
 * Datasets are line-delimited JSON; one record per segment:
 *   {"id": "...", "text": "...", "hypothesis": [span...], "gold": [span...],
 *    "system": "...", "lang_pair": "..."}
 * where a span is {"start": int, "end": int} with 0-based half-open
 * character offsets (Unicode scalar values), plus optional "severity" and
 * "category" labels. Pass one_based_inclusive != 0 to ingest 1-based
 * inclusive offsets instead. Unknown fields round-trip unchanged.
 */
SPANSCORE_API spanscore_status spanscore_dataset_load(
    const char *path, int one_based_inclusive, spanscore_dataset **out);
SPANSCORE_API spanscore_status spanscore_dataset_parse(
    const char *jsonl, size_t length, int one_based_inclusive,
    spanscore_dataset **out);
/* Appends all segments of src to dst; re-checks (system, id) uniqueness. */
SPANSCORE_API spanscore_status spanscore_dataset_merge(
    spanscore_dataset *dst, const spanscore_dataset *src);
SPANSCORE_API size_t spanscore_dataset_segments(const spanscore_dataset *ds);
SPANSCORE_API spanscore_status spanscore_dataset_serialize(
    const spanscore_dataset *ds, char **out, size_t *out_length);
SPANSCORE_API void spanscore_dataset_free(spanscore_dataset *ds);

/* Applies a perturbation ("extend:<k>", "drop:<p>:<seed>:<reps>",
 * "remove-few:<t>") and returns a new dataset. repetition selects the
 * seeded repetition stream for "drop"; it is ignored by the other kinds. */
SPANSCORE_API spanscore_status spanscore_dataset_perturb(
    const spanscore_dataset *ds, const char *spec, uint32_t repetition,
    spanscore_dataset **out);

/* ---- scoring ----------------------------------------------------------- */

typedef struct spanscore_options {
  /* comma-separated measure list: em | mp:<tau> | mpp | approx-w25 | w19 |
   * w23 | w25 (required, at least one entry) */
  const char *measures;
  /* comma-separated averaging list: micro | macro (NULL means "micro") */
  const char *averaging;
  /* "none" | "lang_pair" | "system" (NULL means "none") */
  const char *group_by;
  /* nonzero: the ALL row pools all segments instead of averaging groups */
  int pool_groups;
  /* optional perturbation applied before scoring (see dataset_perturb) */
  const char *perturb;
  /* comma-separated sweep grid; required by spanscore_sweep, else NULL */
  const char *sweep;
  /* worker threads; <= 0 means 1; never affects output bytes */
  int workers;
  /* matching enumeration budget per connected component; 0 = 2^20 */
  uint64_t budget;
} spanscore_options;

SPANSCORE_API spanscore_status spanscore_score(
    const spanscore_dataset *ds, const spanscore_options *opts,
    spanscore_report **out);
SPANSCORE_API spanscore_status spanscore_sweep(
    const spanscore_dataset *ds, const spanscore_options *opts,
    spanscore_report **out);
SPANSCORE_API spanscore_status spanscore_rank(
    const spanscore_dataset *ds, const spanscore_options *opts,
    spanscore_report **out);

/* ---- reports ------------------------------------------------------------
 *
 * Score/sweep reports expose the columns
 *   system, measure, tau, averaging, group, precision, recall, f,
 *   n_segments, n_hyp_spans, n_gold_spans
 * plus param, p_min, p_max, r_min, r_max, f_min, f_max for sweeps.
 * Rank reports expose measure, tau, averaging, rank, system, precision,
 * recall, f. Numeric cells are rendered from exact rationals, rounded
 * half-to-even at `digits` decimal places (digits <= 0 selects 4).
 */
SPANSCORE_API size_t spanscore_report_rows(const spanscore_report *report);
SPANSCORE_API spanscore_status spanscore_report_cell(
    const spanscore_report *report, size_t row, const char *column,
    int digits, char **out);
/* format: "csv" | "tsv" | "table" | "svg" (svg requires sweep rows) */
SPANSCORE_API spanscore_status spanscore_report_render(
    const spanscore_report *report, const char *format, int digits,
    char **out, size_t *out_length);
SPANSCORE_API void spanscore_report_free(spanscore_report *report);

/* ---- utilities ---------------------------------------------------------- */

/* Locates `quoted` in `text` (both UTF-8) and returns 0-based half-open
 * character offsets. occurrence < 0 selects the first occurrence; otherwise
 * the given 0-based occurrence. *ambiguous is set to 1 when more than one
 * occurrence exists and none was requested. */
SPANSCORE_API spanscore_status spanscore_resolve_span(
    const char *text, const char *quoted, long occurrence, long *start,
    long *end, int *ambiguous);

/* Runs the embedded fixture and solver-vs-oracle checks. Returns OK even
 * when checks fail; *failures holds the number of failed checks and *log a
 * line per check. */
SPANSCORE_API spanscore_status spanscore_selfcheck(char **log,
                                                   size_t *log_length,
                                                   int *failures);

SPANSCORE_API void spanscore_buffer_free(char *buffer);

#ifdef __cplusplus
}
#endif

#endif /* SPANSCORE_H */
