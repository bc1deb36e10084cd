// Copyright 2026 The chm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the chm library. Objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns a chm_status; on failure chm_last_error() describes the problem for
 * the calling thread. Strings returned through char** are heap allocated and
 * released with chm_string_free.
 */
#ifndef CHM_CHM_H_
#define CHM_CHM_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CHM_BUILDING_LIBRARY)
#define CHM_API __attribute__((visibility("default")))
#else
#define CHM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum chm_status {
  CHM_OK = 0,
  CHM_ERR_PARSE = 1,
  CHM_ERR_DIMENSION_MISMATCH = 2,
  CHM_ERR_NOT_ACHIEVABLE = 3,
  CHM_ERR_EXACT_MODE_UNAVAILABLE = 4,
  CHM_ERR_AMBIGUOUS_CLASSIFICATION = 5,
  CHM_ERR_NOT_A_CHM = 6,
  CHM_ERR_ORDER_TOO_LARGE = 7,
  CHM_ERR_INFEASIBLE_SWEEP = 8,
  CHM_ERR_NOT_APPLICABLE = 9,
  CHM_ERR_NOT_FOUND = 10,
  CHM_ERR_NON_PRIME_ODD = 11,
  CHM_ERR_INVALID_ARGUMENT = 12,
  CHM_ERR_IO = 13,
  CHM_ERR_NULL_ARGUMENT = 14,
  CHM_ERR_INTERNAL = 15
} chm_status;

typedef struct chm_matrix chm_matrix;
typedef struct chm_transform chm_transform;
typedef struct chm_sweep_report chm_sweep_report;

/* ---- library ------------------------------------------------------------ */

CHM_API const char* chm_version(void);
/* Message for the last failed call on this thread ("" if none). */
CHM_API const char* chm_last_error(void);
/* Symbolic name such as "NotAchievable". */
CHM_API const char* chm_status_name(chm_status status);
CHM_API void chm_string_free(char* s);

/* ---- matrices ----------------------------------------------------------- */

CHM_API chm_status chm_matrix_parse(const char* text, chm_matrix** out);
CHM_API chm_status chm_matrix_read_file(const char* path, chm_matrix** out);
CHM_API chm_status chm_matrix_write_file(const chm_matrix* m, const char* path);
CHM_API chm_status chm_matrix_format(const chm_matrix* m, char** out);
CHM_API chm_status chm_matrix_clone(const chm_matrix* m, chm_matrix** out);
CHM_API void chm_matrix_free(chm_matrix* m);

CHM_API int chm_matrix_rows(const chm_matrix* m);
CHM_API int chm_matrix_cols(const chm_matrix* m);
/* Canonical phase token of entry (r, c). */
CHM_API chm_status chm_matrix_entry(const chm_matrix* m, int r, int c, char** token);
/* 1 when both matrices hold identical entries. */
CHM_API int chm_matrix_equal(const chm_matrix* a, const chm_matrix* b);

CHM_API chm_status chm_matrix_fourier(int n, chm_matrix** out);
/* Named bases: fourier<n>, g6, m4, h31(a,b), h32(a,b,c), h61..h64 (three-row
 * prefixes), optionally prefixed by "<phase>*". */
CHM_API chm_status chm_matrix_named(const char* name, chm_matrix** out);
CHM_API chm_status chm_matrix_transpose(const chm_matrix* m, chm_matrix** out);
CHM_API chm_status chm_matrix_conjugate(const chm_matrix* m, chm_matrix** out);
CHM_API chm_status chm_matrix_kron(const chm_matrix* a, const chm_matrix* b, chm_matrix** out);

/* ---- constructions ------------------------------------------------------ */

/* CHM of order n in {2,3,4,6} with exactly `count` real entries. */
CHM_API chm_status chm_construct(int n, int count, chm_matrix** out);
CHM_API chm_status chm_theorem_i_matrix(int n, int d, chm_matrix** out);
CHM_API chm_status chm_theorem_ii_matrix(int n, int d, chm_matrix** out);
/* Writes up to `cap` achievable counts of order n ascending; *len receives
 * the full size. */
CHM_API chm_status chm_achievable_counts(int n, int* counts, size_t cap, size_t* len);
CHM_API chm_status chm_recipes_shipped(char** text);
CHM_API chm_status chm_recipes_regenerate(char** text);

/* ---- verification and census -------------------------------------------- */

typedef enum chm_verify_mode {
  CHM_VERIFY_AUTO = 0, /* exact when every entry is a rational turn */
  CHM_VERIFY_EXACT = 1,
  CHM_VERIFY_NUMERIC = 2
} chm_verify_mode;

CHM_API chm_status chm_verify(const chm_matrix* m, chm_verify_mode mode, double tol,
                              int* is_chm);

/* Array arguments may be NULL; otherwise imaginary_array and per_row hold
 * rows() ints and per_col holds cols() ints. */
CHM_API chm_status chm_census(const chm_matrix* m, int* real_count, int* approximate,
                              int* imaginary_array, int* per_row, int* per_col);

/* ---- equivalence -------------------------------------------------------- */

CHM_API chm_status chm_transform_parse(const char* text, chm_transform** out);
CHM_API chm_status chm_transform_read_file(const char* path, chm_transform** out);
CHM_API chm_status chm_transform_format(const chm_transform* t, char** out);
CHM_API void chm_transform_free(chm_transform* t);

CHM_API chm_status chm_transform_apply(const chm_transform* t, const chm_matrix* m,
                                       chm_matrix** out);
/* `transform` may be NULL. */
CHM_API chm_status chm_dephase(const chm_matrix* m, chm_matrix** out, chm_transform** transform);
/* Permutation equivalence; `witness` may be NULL and is set only when
 * *equivalent is 1. */
CHM_API chm_status chm_find_equivalence(const chm_matrix* a, const chm_matrix* b,
                                        int* equivalent, chm_transform** witness);
CHM_API chm_status chm_random_orbit(const chm_matrix* m, uint64_t seed, int roots,
                                    chm_matrix** out);

/* ---- search ------------------------------------------------------------- */

/* mode: "full", "full-pruned" or "parameterized". */
CHM_API chm_status chm_sweep(int n, int q, const char* mode, int threads,
                             chm_sweep_report** out);
CHM_API void chm_sweep_report_free(chm_sweep_report* r);
CHM_API size_t chm_sweep_observed(const chm_sweep_report* r, int* counts, size_t cap);
CHM_API uint64_t chm_sweep_candidates(const chm_sweep_report* r);
CHM_API uint64_t chm_sweep_chms(const chm_sweep_report* r);
CHM_API chm_status chm_sweep_witness(const chm_sweep_report* r, int count, chm_matrix** out);

CHM_API chm_status chm_sum3_oracle(int q, int* holds, uint64_t* examined, uint64_t* zero_sums);
CHM_API chm_status chm_sum4_oracle(int q, int* holds, uint64_t* examined, uint64_t* zero_sums);

/* Representatives are returned as an array of handles released with
 * chm_matrix_array_free. */
CHM_API chm_status chm_classify_three_rows(int q, uint64_t* systems, chm_matrix*** reps,
                                           size_t* count);
CHM_API void chm_matrix_array_free(chm_matrix** arr, size_t count);
/* *index receives k in 1..4 when `prefix` is equivalent to h6k, else 0. */
CHM_API chm_status chm_three_rows_known(const chm_matrix* prefix, int* index);

CHM_API size_t chm_predicate_count(void);
CHM_API const char* chm_predicate_name(size_t i);
CHM_API chm_status chm_predicate_applies(const chm_matrix* m, const char* id, int* applies);
/* `detail` may be NULL; it receives a description of a violation, with the
 * witness rows and columns, or NULL on a pass. */
CHM_API chm_status chm_predicate_check(const chm_matrix* m, const char* id, int* pass,
                                       char** detail);
CHM_API chm_status chm_predicate_suite(uint64_t samples, uint64_t seed, int threads, int* pass,
                                       uint64_t* matrices, uint64_t* checks, char** detail,
                                       chm_matrix** witness);
/* histogram: 37 slots indexed by real count (may be NULL). */
CHM_API chm_status chm_s6_audit(uint64_t samples, uint64_t seed, int threads, int* pass,
                                uint64_t* histogram, uint64_t* violating_sample,
                                chm_matrix** violation);

/* ---- MUB screening ------------------------------------------------------ */

typedef enum chm_verdict_kind {
  CHM_EXCLUDED_BY_REAL_COUNT = 0,
  CHM_EXCLUDED_BY_REAL_SUBMATRIX = 1,
  CHM_NOT_EXCLUDED = 2
} chm_verdict_kind;

/* witness_rows[3] / witness_cols[2] may be NULL; filled with -1 unless the
 * verdict is CHM_EXCLUDED_BY_REAL_SUBMATRIX. */
CHM_API chm_status chm_screen(const chm_matrix* m, chm_verdict_kind* kind, int* real_count,
                              int* witness_rows, int* witness_cols);
CHM_API const char* chm_verdict_tag(chm_verdict_kind kind);
/* Standard basis versus the basis spanned by the normalized columns. */
CHM_API chm_status chm_unbiased_with_identity(const chm_matrix* m, int* unbiased);

#ifdef __cplusplus
}
#endif

#endif /* CHM_CHM_H_ */
