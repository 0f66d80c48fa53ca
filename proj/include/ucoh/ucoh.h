/* Copyright 2026 The ucoh Authors
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

#ifndef UCOH_UCOH_H_
#define UCOH_UCOH_H_

/* C interface to the ucoh library.
 *
 * Every fallible call returns a ucoh_status. On failure the message is
 * available from ucoh_last_error() until the next call on the same thread.
 * Handles are opaque and owned by the caller; strings returned through
 * char** out-parameters must be released with ucoh_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(UCOH_BUILDING)
#define UCOH_API __attribute__((visibility("default")))
#else
#define UCOH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ucoh_status {
    UCOH_OK = 0,
    UCOH_ERR_VALIDATION = 1,
    UCOH_ERR_DOMAIN = 2,
    UCOH_ERR_NOT_A_STATE = 3,
    UCOH_ERR_SUPPORT = 4,
    UCOH_ERR_SCHEMA = 5,
    UCOH_ERR_IO = 6,
    UCOH_ERR_UNCERTIFIED = 7,
    UCOH_ERR_VIOLATION = 8,
    UCOH_ERR_DISCREPANCY = 9,
    UCOH_ERR_INTERNAL = 10,
    UCOH_ERR_NULL_ARGUMENT = 11
} ucoh_status;

typedef enum ucoh_branch {
    UCOH_BRANCH_B1 = 1,   /* alpha in [1/2, 1), any beta != 0 */
    UCOH_BRANCH_B2 = 2,   /* alpha in (0, 1/2), beta < 0 */
    UCOH_BRANCH_B3 = 3,   /* alpha in (0, 1/2), beta in (0, 1] */
    UCOH_BRANCH_RENYI = 4 /* beta = 0 */
} ucoh_branch;

typedef struct ucoh_state ucoh_state;
typedef struct ucoh_ensemble ucoh_ensemble;

UCOH_API const char* ucoh_version(void);
UCOH_API const char* ucoh_last_error(void);
UCOH_API const char* ucoh_status_name(ucoh_status status);
/* Process exit code for a status: 0 ok, 2 violation or discrepancy,
 * 3 I/O, 1 otherwise. */
UCOH_API int ucoh_exit_code(ucoh_status status);
UCOH_API void ucoh_string_free(char* s);

/* Writes x with 12 significant digits into buf (at least 32 bytes). */
UCOH_API ucoh_status ucoh_format_value(double x, char* buf, size_t len);

/* ---- ensembles ---- */

/* mub2 | mub-prime-D | simplex-D | sic2 | file:PATH */
UCOH_API ucoh_status ucoh_ensemble_from_spec(const char* spec, ucoh_ensemble** out);
UCOH_API void ucoh_ensemble_free(ucoh_ensemble* e);
UCOH_API ucoh_status ucoh_ensemble_shape(const ucoh_ensemble* e, int* dim, int* count, int* members);
/* Certification report; *passed is 1 iff every check holds. */
UCOH_API ucoh_status ucoh_ensemble_verify(const ucoh_ensemble* e, int* passed, char** report);
UCOH_API ucoh_status ucoh_ensemble_save(const ucoh_ensemble* e, const char* path);

/* ---- states ---- */

/* mixed | pure:VEC | pseudopure:V | bloch:R1,R2,R3 | random */
UCOH_API ucoh_status ucoh_state_from_spec(const char* spec, int dim, uint64_t seed, ucoh_state** out);
/* Row-major real and imaginary parts, dim*dim entries each. */
UCOH_API ucoh_status ucoh_state_from_matrix(int dim, const double* re, const double* im, ucoh_state** out);
UCOH_API void ucoh_state_free(ucoh_state* s);
UCOH_API int ucoh_state_dim(const ucoh_state* s);

/* ---- queries ---- */

UCOH_API ucoh_status ucoh_branch_of(double alpha, double beta, ucoh_branch* out);
/* Averaged coherence over the ensemble (Renyi form when beta = 0). */
UCOH_API ucoh_status ucoh_avg_coherence(const ucoh_ensemble* e, const ucoh_state* s, double alpha,
                                        double beta, double* out);
/* Lower bound for the ensemble's shape, dispatched by branch. */
UCOH_API ucoh_status ucoh_lower_bound(const ucoh_ensemble* e, const ucoh_state* s, double alpha,
                                      double beta, double* out);

/* ---- drivers ----
 * out_path NULL or "-" writes CSV to standard output. CSV is written in
 * full before a violation or discrepancy status is returned. */

typedef struct ucoh_example_grid {
    int alpha_steps;
    double epsilon;
    int x_steps;
} ucoh_example_grid;

typedef struct ucoh_example_summary {
    size_t rows;
    double max_gap;
    double min_gap;
    double max_closed_deviation;
} ucoh_example_summary;

UCOH_API void ucoh_example_grid_default(ucoh_example_grid* grid);
/* which = 1 or 2. */
UCOH_API ucoh_status ucoh_run_example(int which, const ucoh_example_grid* grid, const char* out_path,
                                      ucoh_example_summary* summary);

typedef struct ucoh_axis {
    const char* name; /* alpha | beta | v | r1 */
    double start;
    double stop;
    int steps;
} ucoh_axis;

typedef struct ucoh_scan_spec {
    const ucoh_axis* axes;
    size_t axis_count;
    double alpha;
    double beta;
    const char* state;
    const char* ensemble;
    uint64_t seed;
} ucoh_scan_spec;

typedef struct ucoh_scan_summary {
    size_t rows;
    double min_gap;
    size_t violations;
} ucoh_scan_summary;

UCOH_API ucoh_status ucoh_run_scan(const ucoh_scan_spec* spec, const char* out_path, ucoh_scan_summary* summary);

typedef struct ucoh_random_spec {
    const char* const* ensembles;
    size_t ensemble_count;
    const ucoh_branch* branches;
    size_t branch_count;
    size_t samples;
    uint64_t seed;
} ucoh_random_spec;

typedef struct ucoh_random_summary {
    size_t states;
    size_t evaluations;
    size_t violations;
    size_t negative_bounds;
    size_t lemma2_violations;
    size_t clamped_braces;
    double min_gap;
    double min_bound;
    double max_lemma2_excess;
    int passed;
} ucoh_random_summary;

/* Returns UCOH_ERR_VIOLATION when any check fails; the summary and report
 * are filled in either case. */
UCOH_API ucoh_status ucoh_run_random_test(const ucoh_random_spec* spec, ucoh_random_summary* summary,
                                          char** report);

/* JSON sidecar with command, parameters (a JSON object), version and
 * summary (a JSON object). */
UCOH_API ucoh_status ucoh_write_run_record(const char* path, const char* command, const char* params_json,
                                           const char* summary_json);

#ifdef __cplusplus
}
#endif

#endif /* UCOH_UCOH_H_ */
