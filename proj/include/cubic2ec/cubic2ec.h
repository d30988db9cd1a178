/* Copyright 2026 The cubic2ec Authors
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

#ifndef CUBIC2EC_CUBIC2EC_H_
#define CUBIC2EC_CUBIC2EC_H_

#include <stddef.h>

#if defined(C2EC_BUILDING_LIBRARY)
#define C2EC_API __attribute__((visibility("default")))
#else
#define C2EC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum c2ec_status {
  C2EC_OK = 0,
  /* Bad input. */
  C2EC_ERR_PARSE = 1,
  C2EC_ERR_FORMAT = 2,
  C2EC_ERR_PRECONDITION = 3,
  C2EC_ERR_SIZE_LIMIT = 4,
  C2EC_ERR_INVALID_ARGUMENT = 5,
  /* Internal invariant violations. */
  C2EC_ERR_STRUCTURAL = 10,
  C2EC_ERR_LEMMA3 = 11,
  C2EC_ERR_BASE_CASE = 12,
  C2EC_ERR_LIFT = 13,
  C2EC_ERR_GLUE = 14,
  C2EC_ERR_PATTERN = 15,
  C2EC_ERR_ORACLE = 16,
  C2EC_ERR_UNKNOWN = 20
} c2ec_status;

typedef struct c2ec_graph c2ec_graph;
typedef struct c2ec_certificate c2ec_certificate;

/* Message of the last failed call on this thread; never NULL. */
C2EC_API const char* c2ec_last_error(void);
C2EC_API const char* c2ec_status_name(c2ec_status status);
/* Nonzero for C2EC_ERR_STRUCTURAL .. C2EC_ERR_UNKNOWN. */
C2EC_API int c2ec_status_is_internal(c2ec_status status);

/* Strings returned through char** are owned by the caller. */
C2EC_API void c2ec_string_free(char* s);

C2EC_API c2ec_status c2ec_graph_from_graph6(const char* text, c2ec_graph** out);
C2EC_API c2ec_status c2ec_graph_from_edge_list(const char* text, c2ec_graph** out);
C2EC_API c2ec_status c2ec_graph_builtin(const char* name, c2ec_graph** out);
/* Newline-separated builtin names. */
C2EC_API c2ec_status c2ec_builtin_names(char** out);
C2EC_API void c2ec_graph_free(c2ec_graph* g);
C2EC_API int c2ec_graph_order(const c2ec_graph* g);
C2EC_API int c2ec_graph_size(const c2ec_graph* g);
C2EC_API c2ec_status c2ec_graph_to_graph6(const c2ec_graph* g, char** out);
C2EC_API c2ec_status c2ec_graph_is_essentially_4ec(const c2ec_graph* g, int* out);

/* Uniform 7/9 certificate for a cubic 3-edge-connected graph with at most
 * max_order vertices (at most 20). */
C2EC_API c2ec_status c2ec_certify(const c2ec_graph* g, int max_order, c2ec_certificate** out);
C2EC_API void c2ec_certificate_free(c2ec_certificate* cert);
C2EC_API c2ec_status c2ec_certificate_to_json(const c2ec_certificate* cert, char** out);
C2EC_API c2ec_status c2ec_certificate_from_json(const char* json, c2ec_certificate** out);
C2EC_API c2ec_status c2ec_certificate_summary(const c2ec_certificate* cert, int* order,
                                              size_t* entries, int* min_support, int* bound);

/* *ok is 1 iff every check passes; *report_json lists each check. */
C2EC_API c2ec_status c2ec_verify(const c2ec_graph* g, const c2ec_certificate* cert, int* ok,
                                 char** report_json);

/* Oracles; max_order is at most 16. Rationals are printed as "p/q" or an
 * integer. */
C2EC_API c2ec_status c2ec_exact_opt(const c2ec_graph* g, int max_order, int* value);
C2EC_API c2ec_status c2ec_lp_bound(const c2ec_graph* g, int max_order, char** value);
C2EC_API c2ec_status c2ec_integrality_gap(const c2ec_graph* g, int max_order, char** value);

C2EC_API c2ec_status c2ec_lemma3(const c2ec_graph* g, int* ok, char** report_json);

/* CSV for a graph6 corpus; *worst is 0 ok, 1 invariant failed, 2 bad input,
 * 3 internal violation. */
C2EC_API c2ec_status c2ec_sweep(const char* corpus, int max_order, int jobs, char** csv,
                                int* worst);

#ifdef __cplusplus
}
#endif

#endif /* CUBIC2EC_CUBIC2EC_H_ */
