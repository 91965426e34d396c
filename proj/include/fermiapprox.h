/* Copyright 2026 The fermiapprox Authors - All rights reserved.
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface of the fermiapprox shared library: optimal Slater-determinant
 * (and rank-M multi-configuration) approximation of N-fermion wave
 * functions, reduced density matrices, natural orbitals, Borland-Dennis
 * checks, lemma-based state reductions, the three-in-six canonical form,
 * and random-ensemble studies.
 *
 * Conventions:
 *   - Every function that can fail returns fa_status; FA_OK is 0. The
 *     message for the most recent failure on the calling thread is
 *     available via fa_last_error().
 *   - Objects are opaque handles created by fa_*_ functions and released
 *     with the matching fa_*_free. Handles are independent; distinct
 *     handles may be used from different threads concurrently.
 *   - Orbital indices are 1-based. Complex buffers are split into real
 *     and imaginary parts; matrices are row-major.
 */

#ifndef FERMIAPPROX_H
#define FERMIAPPROX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(FA_BUILDING)
#define FA_API __declspec(dllexport)
#else
#define FA_API __declspec(dllimport)
#endif
#else
#define FA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fa_status {
  FA_OK = 0,
  FA_ERR_ZERO_STATE,
  FA_ERR_SHAPE_MISMATCH,
  FA_ERR_NOT_ORTHONORMAL,
  FA_ERR_NOT_UNITARY,
  FA_ERR_BAD_SHAPE,
  FA_ERR_NOT_NORMALIZED,
  FA_ERR_NOT_HERMITIAN,
  FA_ERR_WRONG_SHAPE,
  FA_ERR_BAD_RANK,
  FA_ERR_TOO_LARGE,
  FA_ERR_NOT_CERTAIN,
  FA_ERR_NOT_SIMULTANEOUS,
  FA_ERR_NOT_OPTIMAL,
  FA_ERR_NOT_PAIRED,
  FA_ERR_UNKNOWN_NAME,
  FA_ERR_PARSE,
  FA_ERR_IO,
  FA_ERR_INVALID_ARGUMENT,
  FA_ERR_INTERNAL
} fa_status;

typedef struct fa_state fa_state;   /* N-fermion wave function */
typedef struct fa_result fa_result; /* approximation result */
typedef struct fa_report fa_report; /* formatted text report */

/* Optimizer settings; initialize with fa_config_init before overriding
 * individual fields. */
typedef struct fa_config {
  int restarts;       /* multi-start count (default 32) */
  int max_iterations; /* per-restart sweep/step cap (default 2000) */
  double tol;         /* stop when the value improves less (default 1e-12) */
  uint64_t seed;      /* base seed; derived per restart (default 0) */
  double step_init;   /* ascent line-search initial step */
  double step_shrink; /* backtracking factor */
  double step_min;    /* smallest accepted step */
} fa_config;

typedef struct fa_bd_report {
  double sum_1_6, sum_2_5, sum_3_4; /* occupation pair sums */
  double slack;                     /* lambda5 + lambda6 - lambda4 */
  double tol;
  int satisfied;
} fa_bd_report;

FA_API const char* fa_version(void);
FA_API const char* fa_last_error(void);
FA_API void fa_config_init(fa_config* cfg);

/* ---- states ---------------------------------------------------------- */

FA_API fa_status fa_state_load(const char* path, int normalize,
                               fa_state** out);
FA_API fa_status fa_state_save(const fa_state* state, const char* path);
/* indices: n_terms * particles entries, term-major. */
FA_API fa_status fa_state_from_terms(int particles, int orbitals,
                                     size_t n_terms, const int* indices,
                                     const double* re, const double* im,
                                     int normalize, fa_state** out);
FA_API fa_status fa_state_builtin(const char* name, fa_state** out);
FA_API fa_status fa_state_random(int particles, int orbitals, uint64_t seed,
                                 fa_state** out);
FA_API fa_status fa_state_normalized(const fa_state* state, fa_state** out);
FA_API void fa_state_free(fa_state* state);

FA_API int fa_state_particles(const fa_state* state);
FA_API int fa_state_orbitals(const fa_state* state);
FA_API size_t fa_state_term_count(const fa_state* state);
FA_API double fa_state_norm(const fa_state* state);
/* Buffers sized term_count*particles (indices) and term_count (re, im). */
FA_API fa_status fa_state_terms(const fa_state* state, int* indices,
                                double* re, double* im);

/* ---- density-matrix analysis ----------------------------------------- */

FA_API fa_status fa_one_particle_rdm(const fa_state* state, double* re,
                                     double* im); /* d*d row-major */
FA_API fa_status fa_occupations(const fa_state* state,
                                double* occ); /* d, descending */
FA_API fa_status fa_envelope_rank(const fa_state* state, double tol,
                                  int* rank);
FA_API fa_status fa_borland_dennis(const fa_state* state, double tol,
                                   fa_bd_report* out);

/* ---- approximation ---------------------------------------------------- */

FA_API fa_status fa_optimize_slater(const fa_state* state,
                                    const fa_config* cfg, fa_result** out);
FA_API fa_status fa_optimize_subspace(const fa_state* state, int rank,
                                      const fa_config* cfg, fa_result** out);
FA_API fa_status fa_exact_rank_dminus1(const fa_state* state,
                                       fa_result** out);
FA_API void fa_result_free(fa_result* result);

FA_API double fa_result_value(const fa_result* result);
FA_API int fa_result_iterations(const fa_result* result);
FA_API int fa_result_restarts(const fa_result* result);
FA_API int fa_result_converged(const fa_result* result);
FA_API fa_status fa_result_frame_shape(const fa_result* result, int* rows,
                                       int* cols);
/* Buffers sized rows*cols, row-major. */
FA_API fa_status fa_result_frame(const fa_result* result, double* re,
                                 double* im);

/* ---- reports (the CLI surface) ---------------------------------------- */

FA_API fa_status fa_report_analyze(const fa_state* state, const char* source,
                                   fa_report** out);
FA_API fa_status fa_report_approximate(const fa_state* state,
                                       const char* source, int rank,
                                       const fa_config* cfg, fa_report** out);
FA_API fa_status fa_report_reduce(const fa_state* state, const char* source,
                                  const fa_config* cfg, fa_report** out);
FA_API fa_status fa_report_canonical36(const fa_state* state,
                                       const char* source,
                                       const fa_config* cfg, fa_report** out);
/* csv_path may be NULL to skip per-sample persistence. */
FA_API fa_status fa_report_ensemble(int particles, int orbitals, int samples,
                                    const fa_config* cfg, const char* csv_path,
                                    fa_report** out);
FA_API fa_status fa_report_examples(const fa_state* state, const char* name,
                                    const char* out_path, fa_report** out);
/* Owned by the report handle; valid until fa_report_free. */
FA_API const char* fa_report_text(const fa_report* report);
FA_API void fa_report_free(fa_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FERMIAPPROX_H */
