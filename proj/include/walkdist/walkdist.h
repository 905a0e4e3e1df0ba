/* Copyright 2026 The walkdist Authors
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


/* C interface to the walkdist library.
 *
 * Objects are opaque handles created and released by the library. Every
 * function that can fail returns a wd_status; on failure wd_last_error()
 * describes the problem for the calling thread. Matrices are row-major in
 * the graph's vertex order (see wd_graph_vertices).
 *
 * Parameters named `t` are strings: a decimal ("0.25", "1e-2") or a ratio
 * "p/q". Expansions run in exact rational arithmetic when t is a ratio. */

#ifndef WALKDIST_WALKDIST_H_
#define WALKDIST_WALKDIST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define WD_API __declspec(dllexport)
#else
#define WD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wd_status {
  WD_OK = 0,
  WD_INVALID_PARAMETER = 1,
  WD_PARAMETER_OUT_OF_RANGE = 2,
  WD_INVALID_INDEX = 3,
  WD_EMPTY_GRAPH = 4,
  WD_NOT_CONNECTED = 5,
  WD_SINGULAR_MATRIX = 6,
  WD_NO_CONVERGENCE = 7,
  WD_DIVERGENCE = 8,
  WD_TOO_LARGE = 9,
  WD_UNSUPPORTED = 10,
  WD_PARSE_ERROR = 11,
  WD_INTERNAL_ERROR = 12,
  WD_OUT_OF_MEMORY = 13
} wd_status;

typedef struct wd_graph wd_graph;
typedef struct wd_expansion wd_expansion;

WD_API const char* wd_status_name(wd_status status);
/* Message for the last failure on this thread; "" if none. */
WD_API const char* wd_last_error(void);

/* ---- graphs ---- */

WD_API wd_status wd_graph_parse(const char* text, wd_graph** out);
WD_API wd_status wd_graph_load(const char* path, wd_graph** out);
/* Vertices 1..n; edge k joins u[k] and v[k] with weight w[k] > 0. */
WD_API wd_status wd_graph_from_edges(size_t n, size_t m, const int* u, const int* v, const double* w,
                                     wd_graph** out);
WD_API void wd_graph_free(wd_graph* g);

WD_API size_t wd_graph_order(const wd_graph* g);
WD_API size_t wd_graph_edge_count(const wd_graph* g);
WD_API wd_status wd_graph_vertices(const wd_graph* g, int* out);
/* Graph file text; release with wd_string_free. */
WD_API wd_status wd_graph_dump(const wd_graph* g, char** out);
WD_API void wd_string_free(char* s);

/* ---- walk metric ---- */

WD_API wd_status wd_spectral_radius(const wd_graph* g, double* rho);
/* out holds n*n doubles. */
WD_API wd_status wd_walk_weights(const wd_graph* g, const char* t, double* out);
WD_API wd_status wd_walk_distances(const wd_graph* g, const char* t, double lambda, double* out);
WD_API wd_status wd_p_metric(const wd_graph* g, const char* t, double* out);
WD_API wd_status wd_cofactor_distance(const wd_graph* g, const char* t, int i, int j, double* out);

/* ---- expansions ---- */

WD_API wd_status wd_jump_spectral_radius(const wd_graph* g, const char* t, int i, int j, double* rho);

typedef struct wd_expansion_row {
  int length;
  double circuits_i_only; /* circuits through i avoiding j */
  double circuits_j_only;
  double round_trip;
  double crossing;
  double signed_sum;
  double cumulative;
  const char* signed_sum_exact;   /* "" unless exact */
  const char* cumulative_exact;
  const char* circuit_figures;    /* space-separated figure collections */
  const char* round_trip_figures;
  const char* crossing_figures;
} wd_expansion_row;

/* Truncated expansion of d_t(i, j) over lengths 1..max_length. */
WD_API wd_status wd_expand(const wd_graph* g, const char* t, int i, int j, int max_length, wd_expansion** out);
WD_API void wd_expansion_free(wd_expansion* e);
WD_API size_t wd_expansion_rows(const wd_expansion* e);
/* Strings in `row` live as long as `e`. */
WD_API wd_status wd_expansion_row_at(const wd_expansion* e, size_t k, wd_expansion_row* row);
WD_API int wd_expansion_is_exact(const wd_expansion* e);
WD_API double wd_expansion_cumulative(const wd_expansion* e);
WD_API const char* wd_expansion_cumulative_exact(const wd_expansion* e);
WD_API double wd_expansion_exact_distance(const wd_expansion* e);
WD_API double wd_expansion_residual(const wd_expansion* e);
WD_API double wd_expansion_jump_rho(const wd_expansion* e);

/* ---- verification ---- */

typedef struct wd_verify_options {
  double tol;            /* <= 0 selects 1e-9 */
  int bijection_length;  /* <= 0 selects 4 */
  int trace_length;      /* <= 0 selects 6 */
} wd_verify_options;

/* JSON report in *report_json (release with wd_string_free); *passed is 1
 * when no check failed. t may be NULL for 0.5 / rho(A). */
WD_API wd_status wd_verify(const wd_graph* g, const char* t, const wd_verify_options* options, char** report_json,
                           int* passed);
WD_API wd_status wd_verify_corpus(uint64_t seed, int count, const wd_verify_options* options, char** report_json,
                                  int* passed);

#ifdef __cplusplus
}
#endif

#endif  /* WALKDIST_WALKDIST_H_ */
