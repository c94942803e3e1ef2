// Copyright 2026 The Hueckel Authors
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

/* C interface to the hueckel core. All handles are opaque and owned by the
 * caller; release them with the matching *_free function. Functions return
 * HK_OK or an error status; hk_last_error() gives the message of the most
 * recent failure on the calling thread. Site indices are 1-based. */

#ifndef HUECKEL_H
#define HUECKEL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define HK_API __declspec(dllexport)
#else
#define HK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_INVALID_ARGUMENT,
  HK_ERR_INDEX_OUT_OF_RANGE,
  HK_ERR_ALTERNATING_ODD_N,
  HK_ERR_CYCLE_TOO_SMALL,
  HK_ERR_UNSUPPORTED_COUPLINGS,
  HK_ERR_ZERO_COUPLING,
  HK_ERR_SINGULAR_MATRIX,
  HK_ERR_SINGULAR_LATTICE,
  HK_ERR_NOT_SINGULAR,
  HK_ERR_ENERGY_AT_POLE,
  HK_ERR_NUMERICALLY_SINGULAR,
  HK_ERR_NOT_SYMMETRIC,
  HK_ERR_TOO_LARGE,
  HK_ERR_BUDGET_EXHAUSTED,
  HK_ERR_NEAR_SINGULAR_ANGLE,
  HK_ERR_DEGENERATE_ANGLE,
  HK_ERR_METHOD_NOT_APPLICABLE,
  HK_ERR_IDENTITY_VIOLATION,
  HK_ERR_NULL_ARGUMENT,
  HK_ERR_INTERNAL
} hk_status;

typedef enum hk_topology { HK_OPEN = 0, HK_CYCLIC = 1 } hk_topology;

typedef enum hk_method {
  HK_METHOD_CLOSED = 0,  /* exact closed forms */
  HK_METHOD_USMANI,      /* exact tridiagonal recurrences, open chains */
  HK_METHOD_NUMERIC,     /* pivoted LU in double precision */
  HK_METHOD_SPECTRAL     /* eigen-expansion of the resolvent at E = 0 */
} hk_method;

/* Chain description. alpha and beta are exact rationals ("p" or "p/q");
 * NULL means 1. beta sits on bonds (1,2), (3,4), ...; alpha on (2,3), ... */
typedef struct hk_chain {
  hk_topology topology;
  int n;
  const char* alpha;
  const char* beta;
} hk_chain;

typedef struct hk_matrix hk_matrix;
typedef struct hk_decision hk_decision;
typedef struct hk_report hk_report;

HK_API const char* hk_status_name(hk_status status);
HK_API const char* hk_last_error(void);

/* Renders a double with 17 significant digits into buf; returns the full
 * length, like snprintf. */
HK_API size_t hk_format_real(double value, char* buf, size_t cap);

/* 1 if text parses as an exact rational, else 0. */
HK_API int hk_rational_valid(const char* text);

HK_API hk_status hk_build_chain(const hk_chain* chain, hk_matrix** out);
/* max_cells caps rows*cols of the dense matrix; 0 selects the default. */
HK_API hk_status hk_build_lattice(int d, int n, uint64_t max_cells, hk_matrix** out);

HK_API hk_status hk_green_chain(const hk_chain* chain, hk_method method, hk_matrix** out);
/* Single entry G(r, s) as a 1x1 matrix. */
HK_API hk_status hk_green_chain_entry(const hk_chain* chain, hk_method method, int r, int s,
                                      hk_matrix** out);
HK_API hk_status hk_green_lattice(int d, int n, hk_matrix** out);
/* r and s point at d coordinates each, 1..n. */
HK_API hk_status hk_green_lattice_entry(int d, int n, const int* r, const int* s, double* out);

/* Entrywise |g|^2. */
HK_API hk_status hk_transmission(const hk_matrix* g, hk_matrix** out);

HK_API hk_status hk_det(hk_topology topology, int n, int64_t* out);

/* budget 0 selects the default search budget. */
HK_API hk_status hk_invertible(int d, int n_plus_one, int want_witness, uint64_t budget,
                               hk_decision** out);

/* suite: open, cyclic, alternating, lattice, numbertheory, trig or all. */
HK_API hk_status hk_verify(const char* suite, int max_n, uint64_t seed, hk_report** out);

HK_API size_t hk_matrix_rows(const hk_matrix* m);
HK_API size_t hk_matrix_cols(const hk_matrix* m);
HK_API int hk_matrix_is_exact(const hk_matrix* m);
/* Writes the rendered entry ("p/q" or 17 significant digits) into buf and
 * returns the full length, like snprintf. */
HK_API size_t hk_matrix_entry_string(const hk_matrix* m, size_t row, size_t col, char* buf,
                                     size_t cap);
HK_API double hk_matrix_entry_double(const hk_matrix* m, size_t row, size_t col);
HK_API void hk_matrix_free(hk_matrix* m);

HK_API int hk_decision_invertible(const hk_decision* d);
HK_API const char* hk_decision_reason(const hk_decision* d);
HK_API int hk_decision_has_witness(const hk_decision* d);
HK_API size_t hk_decision_witness_size(const hk_decision* d);
HK_API int hk_decision_witness(const hk_decision* d, size_t i);
HK_API void hk_decision_free(hk_decision* d);

HK_API size_t hk_report_size(const hk_report* r);
HK_API int hk_report_all_passed(const hk_report* r);
HK_API const char* hk_report_check_id(const hk_report* r, size_t i);
HK_API uint64_t hk_report_passed(const hk_report* r, size_t i);
HK_API uint64_t hk_report_failed(const hk_report* r, size_t i);
HK_API double hk_report_worst_residual(const hk_report* r, size_t i);
HK_API double hk_report_tolerance(const hk_report* r, size_t i);
HK_API void hk_report_free(hk_report* r);

#ifdef __cplusplus
}
#endif

#endif /* HUECKEL_H */
