/* Copyright 2026 The subsel Authors.
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

/* subsel: subset selection for annotation budgets over embedding pools.
 *
 * C interface to the selection toolkit. All state lives behind opaque
 * handles; every fallible call returns a subsel_status and leaves a
 * human-readable message in subsel_last_error() (thread-local) on failure.
 * Handles are created by subsel_*_load/build/run calls and released with
 * the matching subsel_*_free; they are immutable once returned and safe to
 * share across threads.
 */

#ifndef SUBSEL_SUBSEL_H_
#define SUBSEL_SUBSEL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define SUBSEL_API __declspec(dllexport)
#else
#  define SUBSEL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum subsel_status {
  SUBSEL_OK = 0,
  SUBSEL_ERROR_IO = 1,         /* file cannot be opened/read/written */
  SUBSEL_ERROR_PARSE = 2,      /* malformed file content */
  SUBSEL_ERROR_VALIDATION = 3, /* parsed content violates data invariants */
  SUBSEL_ERROR_CONTRACT = 4,   /* precondition violated by the caller */
  SUBSEL_ERROR_REFUSED = 5,    /* declined by a safety guard */
  SUBSEL_ERROR_NOMEM = 6,
  SUBSEL_ERROR_UNKNOWN = 7
} subsel_status;

typedef enum subsel_format {
  SUBSEL_FORMAT_BINARY = 0, /* SUBSAEMB header + f32le payload */
  SUBSEL_FORMAT_CSV = 1,
  SUBSEL_FORMAT_JSONL = 2
} subsel_format;

typedef enum subsel_method {
  SUBSEL_METHOD_SUBSA = 0,     /* reward/penalty greedy (cached gains) */
  SUBSEL_METHOD_RANDOM = 1,
  SUBSEL_METHOD_DIVERSITY = 2, /* farthest-point on normalized rows */
  SUBSEL_METHOD_MFL = 3,       /* greedy facility location */
  SUBSEL_METHOD_FAST_VOTEK = 4,
  SUBSEL_METHOD_SUBSA_NAIVE = 5 /* benchmark reference, no gain caching */
} subsel_method;

typedef struct subsel_matrix subsel_matrix; /* immutable embedding pool */
typedef struct subsel_model subsel_model;   /* similarity aggregates */
typedef struct subsel_result subsel_result; /* one selection run */

typedef struct subsel_select_config {
  subsel_method method;
  uint32_t budget;
  double lambda1;    /* representative (reward) weight, default 2 */
  double lambda2;    /* diverse (penalty) weight, default -1 */
  uint64_t seed;     /* random method only, default 42 */
  uint32_t votek_k;  /* fast-votek neighbor count, default 150 */
  double votek_rho;  /* fast-votek discount base, default 10 */
} subsel_select_config;

typedef struct subsel_verify_stats {
  uint64_t monotonicity_checks, monotonicity_failures;
  uint64_t submodularity_checks, submodularity_failures;
  uint64_t incremental_checks, incremental_failures;
  uint64_t bound_checks, bound_failures;
  double monotonicity_ms, submodularity_ms, bound_ms;
} subsel_verify_stats;

SUBSEL_API const char* subsel_version(void);

/* Message for the most recent failure on this thread; never NULL. */
SUBSEL_API const char* subsel_last_error(void);

/* --- embedding pools ---------------------------------------------------- */

SUBSEL_API subsel_status subsel_matrix_load(const char* path,
                                            subsel_format format,
                                            subsel_matrix** out);

/* Copies rows*dim floats, row-major. Data must be finite with no zero rows. */
SUBSEL_API subsel_status subsel_matrix_from_data(const float* data,
                                                 uint32_t rows, uint32_t dim,
                                                 subsel_matrix** out);

/* Seeded Gaussian-mixture pool for benchmarks (clusters >= 1). */
SUBSEL_API subsel_status subsel_matrix_synthetic(uint32_t rows, uint32_t dim,
                                                 uint32_t clusters,
                                                 uint64_t seed,
                                                 subsel_matrix** out);

SUBSEL_API subsel_status subsel_matrix_save(const subsel_matrix* matrix,
                                            const char* path,
                                            subsel_format format);

SUBSEL_API uint32_t subsel_matrix_rows(const subsel_matrix* matrix);
SUBSEL_API uint32_t subsel_matrix_dim(const subsel_matrix* matrix);

/* Row view, valid while the matrix lives; NULL when i is out of range. */
SUBSEL_API const float* subsel_matrix_row(const subsel_matrix* matrix,
                                          uint32_t i);

/* Row id (explicit file id or the decimal row index). The returned pointer
 * is valid until the next subsel_matrix_id call on the same thread. */
SUBSEL_API const char* subsel_matrix_id(const subsel_matrix* matrix,
                                        uint32_t i);

SUBSEL_API void subsel_matrix_free(subsel_matrix* matrix);

/* --- similarity model ---------------------------------------------------- */

/* Non-negative cosine similarity of two raw vectors, in [0, 1]. */
SUBSEL_API subsel_status subsel_kernel(const float* u, const float* v,
                                       uint32_t dim, double* out);

/* Builds column sums and, when rows <= dense_threshold, the dense matrix.
 * dense_threshold 0 selects the default (20000). */
SUBSEL_API subsel_status subsel_model_build(const subsel_matrix* matrix,
                                            uint32_t dense_threshold,
                                            subsel_model** out);

SUBSEL_API uint32_t subsel_model_size(const subsel_model* model);
SUBSEL_API int subsel_model_has_dense(const subsel_model* model);

/* Copies all column sums into out (capacity >= size). */
SUBSEL_API subsel_status subsel_model_colsum(const subsel_model* model,
                                             double* out, size_t capacity);

/* Single similarity value s(a, b). */
SUBSEL_API subsel_status subsel_model_similarity(const subsel_model* model,
                                                 uint32_t a, uint32_t b,
                                                 double* out);

SUBSEL_API void subsel_model_free(subsel_model* model);

/* --- selection ----------------------------------------------------------- */

/* Defaults: subsa method, budget 1, lambda 2/-1, seed 42, votek 150/10. */
SUBSEL_API void subsel_select_config_init(subsel_select_config* config);

/* Runs the configured method over the pool. The model must have been built
 * from the same matrix. The selection stage is timed internally and the
 * elapsed milliseconds stored on the result. */
SUBSEL_API subsel_status subsel_select(const subsel_matrix* matrix,
                                       const subsel_model* model,
                                       const subsel_select_config* config,
                                       subsel_result** out);

/* Reward/penalty objective value of an explicit subset. */
SUBSEL_API subsel_status subsel_objective(const subsel_model* model,
                                          const uint32_t* subset,
                                          uint32_t length, double lambda1,
                                          double lambda2, double* out);

/* Gain of adding `candidate` to `subset`. */
SUBSEL_API subsel_status subsel_marginal_gain(const subsel_model* model,
                                              const uint32_t* subset,
                                              uint32_t length,
                                              uint32_t candidate,
                                              double lambda1, double lambda2,
                                              double* out);

/* Exhaustive optimum over all size-budget subsets; refuses when C(N, T)
 * exceeds 1e7. out_indices needs capacity min(budget, N). */
SUBSEL_API subsel_status subsel_brute_force_optimum(const subsel_model* model,
                                                    uint32_t budget,
                                                    double lambda1,
                                                    double lambda2,
                                                    uint32_t* out_indices,
                                                    uint32_t* out_length,
                                                    double* out_value);

/* --- selection results --------------------------------------------------- */

SUBSEL_API uint32_t subsel_result_size(const subsel_result* result);
SUBSEL_API subsel_status subsel_result_indices(const subsel_result* result,
                                               uint32_t* out, size_t capacity);
SUBSEL_API uint32_t subsel_result_gain_count(const subsel_result* result);
SUBSEL_API subsel_status subsel_result_step_gains(const subsel_result* result,
                                                  double* out,
                                                  size_t capacity);
SUBSEL_API double subsel_result_objective(const subsel_result* result);
SUBSEL_API double subsel_result_select_ms(const subsel_result* result);
SUBSEL_API const char* subsel_result_method(const subsel_result* result);
SUBSEL_API uint32_t subsel_result_pool_size(const subsel_result* result);
SUBSEL_API uint32_t subsel_result_budget(const subsel_result* result);

/* Warning attached to the run ("" when none), e.g. non-default weights. */
SUBSEL_API const char* subsel_result_warning(const subsel_result* result);

/* Stages measured outside the selection proper; pass -1 for unmeasured. */
SUBSEL_API subsel_status subsel_result_set_timings(subsel_result* result,
                                                   double io_ms,
                                                   double build_ms);
SUBSEL_API subsel_status subsel_result_set_environment(subsel_result* result,
                                                       const char* note);

/* JSON selection report; load(save(r)) reproduces every field. */
SUBSEL_API subsel_status subsel_result_save(const subsel_result* result,
                                            const char* path);
SUBSEL_API subsel_status subsel_result_load(const char* path,
                                            subsel_result** out);

SUBSEL_API void subsel_result_free(subsel_result* result);

/* --- prompt retrieval ---------------------------------------------------- */

/* Top-`shots` annotated rows by similarity to the query, least similar
 * first. out_indices/out_scores need capacity `shots`. */
SUBSEL_API subsel_status subsel_retrieve(const subsel_matrix* matrix,
                                         const float* query, uint32_t dim,
                                         const uint32_t* annotated,
                                         uint32_t annotated_count,
                                         uint32_t shots, uint32_t* out_indices,
                                         double* out_scores);

/* Seeded uniform sample of the annotated set, in draw order, with kernel
 * scores filled in. */
SUBSEL_API subsel_status subsel_retrieve_random(
    const subsel_matrix* matrix, const float* query, uint32_t dim,
    const uint32_t* annotated, uint32_t annotated_count, uint32_t shots,
    uint64_t seed, uint32_t* out_indices, double* out_scores);

/* --- property suites ------------------------------------------------------ */

/* Runs the monotonicity, submodularity, incremental-agreement and greedy
 * bound suites on seeded random instances. Returns SUBSEL_OK whenever the
 * suites ran; inspect the stats for failures. faulty_kernel swaps in a
 * signed cosine to demonstrate that violations are caught. */
SUBSEL_API subsel_status subsel_verify_run(uint32_t trials, uint64_t seed,
                                           uint32_t max_pool, uint32_t max_dim,
                                           int faulty_kernel,
                                           subsel_verify_stats* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SUBSEL_SUBSEL_H_ */
