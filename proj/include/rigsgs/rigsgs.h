/* Copyright 2026 The rigsgs Authors
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

/* C interface to the rigsgs engine.
 *
 * Handles are opaque and owned by the caller once returned; release them
 * with the matching *_free function. Every string written through a
 * `char** out` parameter is allocated by the library and must be released
 * with rig_string_free. Functions return RIG_OK or an error status; the
 * message for the most recent error on the calling thread is available
 * from rig_last_error. Output parameters are left untouched on error.
 */

#ifndef RIGSGS_H_
#define RIGSGS_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define RIG_API __declspec(dllexport)
#else
#define RIG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rig_status {
  RIG_OK = 0,
  RIG_ERR_PARSE = 1,
  RIG_ERR_INVALID_ARGUMENT = 2,
  RIG_ERR_NO_LEADING_TERM = 3,
  RIG_ERR_NO_OCCURRENCE = 4,
  RIG_ERR_NOT_BELOW_AMBIGUITY = 5,
  RIG_ERR_BUDGET_EXHAUSTED = 6,
  RIG_ERR_NOT_MONIC = 7,
  RIG_ERR_UNKNOWN_PRESET = 8,
  RIG_ERR_INTERNAL = 9
} rig_status;

typedef enum rig_decision {
  RIG_EQUAL = 0,
  RIG_DISTINCT = 1,
  RIG_UNKNOWN = 2
} rig_decision;

typedef struct rig_presentation rig_presentation;
typedef struct rig_report rig_report;

typedef struct rig_limits {
  uint32_t max_degree;
  uint64_t max_steps;
  int has_seed; /* nonzero: break ties among equal ambiguities by seed */
  uint64_t seed;
} rig_limits;

typedef struct rig_oracle_bounds {
  uint32_t max_degree;
  int per_component; /* nonzero: max_degree bounds each summand, else the sum */
  uint32_t max_len;
  uint64_t max_expansions;
} rig_oracle_bounds;

RIG_API const char* rig_version(void);
RIG_API const char* rig_status_message(rig_status status);
/* Message of the last failed call on this thread, "" if none. */
RIG_API const char* rig_last_error(void);
RIG_API void rig_string_free(char* s);

RIG_API void rig_limits_default(rig_limits* out);
RIG_API void rig_oracle_bounds_default(rig_oracle_bounds* out);

/* Presentations ---------------------------------------------------------- */

RIG_API rig_status rig_presentation_parse(const char* text,
                                          rig_presentation** out);
/* With `basis` nonzero, the known reduced basis of the preset. */
RIG_API rig_status rig_presentation_preset(const char* name, int basis,
                                           rig_presentation** out);
RIG_API void rig_presentation_free(rig_presentation* p);
/* Canonical file text; parsing it gives back the same presentation. */
RIG_API rig_status rig_presentation_render(const rig_presentation* p,
                                           char** out);
/* Newline-separated preset names. */
RIG_API rig_status rig_preset_names(char** out);

/* Treats the relations as given and reports whether every composition is
 * trivial. With `list_ambiguities` every composition is listed. */
RIG_API rig_status rig_verify(const rig_presentation* p, int list_ambiguities,
                              int* is_basis, char** report);
/* Minimal reduced form of the relations as given, without completion. */
RIG_API rig_status rig_reduce_basis(const rig_presentation* p, char** out);
/* Bounded breadth-first congruence search over the relations as given. */
RIG_API rig_status rig_oracle_eq(const rig_presentation* p, const char* u,
                                 const char* v, const rig_oracle_bounds* bounds,
                                 int* congruent, char** report);

/* Completion --------------------------------------------------------------- */

/* `limits` may be NULL for the defaults. */
RIG_API rig_status rig_complete(const rig_presentation* p,
                                const rig_limits* limits, rig_report** out);
RIG_API void rig_report_free(rig_report* r);
RIG_API int rig_report_is_complete(const rig_report* r);
RIG_API size_t rig_report_basis_size(const rig_report* r);
/* Presentation file text with status and statistics as comments. */
RIG_API rig_status rig_report_text(const rig_report* r, char** out);
/* {"status", "mode", "order", "vars", "basis": [{"lhs", "rhs"}], "stats"} */
RIG_API rig_status rig_report_json(const rig_report* r, char** out);
RIG_API rig_status rig_report_presentation(const rig_report* r,
                                           rig_presentation** out);

/* Normal form of an expression modulo the completed basis. */
RIG_API rig_status rig_normal_form(const rig_report* r, const char* expr,
                                   int trace, char** out);
RIG_API rig_status rig_decide_eq(const rig_report* r, const char* u,
                                 const char* v, rig_decision* decision,
                                 char** report);
/* Irreducible monomials within the bounds, one per line, ascending. */
RIG_API rig_status rig_irr(const rig_report* r, uint32_t max_degree,
                           uint32_t max_len, char** out);

/* Demonstrations ----------------------------------------------------------- */

RIG_API rig_status rig_demo_names(char** out);
RIG_API rig_status rig_demo(const char* name, int* pass, char** report);

#ifdef __cplusplus
}
#endif

#endif /* RIGSGS_H_ */
