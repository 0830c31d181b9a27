////////////////////////////////////////////////////////////////////////////////
//                                                                            //
//  This file is part of pyramidfe                                            //
//                                                                            //
//  Copyright 2026 pyramidfe developers                                       //
//                                                                            //
//  Licensed under the Apache License, Version 2.0 (the "License");           //
//  you may not use this file except in compliance with the License.          //
//  You may obtain a copy of the License at                                   //
//                                                                            //
//      http://www.apache.org/licenses/LICENSE-2.0                            //
//                                                                            //
//  Unless required by applicable law or agreed to in writing, software       //
//  distributed under the License is distributed on an "AS IS" BASIS,         //
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.  //
//  See the License for the specific language governing permissions and       //
//  limitations under the License.                                            //
//                                                                            //
////////////////////////////////////////////////////////////////////////////////

#ifndef PYRAMID_PYRAMID_H
#define PYRAMID_PYRAMID_H

/* C interface to the pyramid element library. Every call returns a status
 * code; on failure pyr_last_error() describes the problem (per thread).
 * Strings returned through char** are owned by the caller and released with
 * pyr_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define PYR_API __declspec(dllexport)
#else
#  define PYR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PYR_OK = 0,
  PYR_ERR_INVALID_ARGUMENT = 1,
  PYR_ERR_DOMAIN = 2,
  PYR_ERR_SINGULAR_POINT = 3,
  PYR_ERR_REPRESENTATION = 4,
  PYR_ERR_KIND_MISMATCH = 5,
  PYR_ERR_DIVERGENCE = 6,
  PYR_ERR_INTERNAL = 7
} pyr_status;

typedef enum { PYR_FORMAT_JSON = 0, PYR_FORMAT_CSV = 1, PYR_FORMAT_TEXT = 2 } pyr_format;

typedef struct pyr_basis pyr_basis;
typedef struct pyr_report pyr_report;

typedef struct {
  int max_order;             /* k = 1..max_order */
  int quad_points;           /* 0: k+3 points per direction */
  int counterexample_degree; /* D for the trace-matching system */
  uint64_t seed;
  int corrupt_basis;         /* negative control: breaks unisolvency */
} pyr_verify_options;

PYR_API const char* pyr_version(void);
PYR_API const char* pyr_last_error(void);
PYR_API const char* pyr_status_name(pyr_status s);
PYR_API void pyr_string_free(char* s);

PYR_API pyr_status pyr_dimension(int s, int k, int* out);

PYR_API pyr_status pyr_basis_create(int s, int k, pyr_basis** out);
PYR_API pyr_status pyr_basis_from_json(const char* json, pyr_basis** out);
PYR_API void pyr_basis_destroy(pyr_basis* b);
PYR_API pyr_status pyr_basis_size(const pyr_basis* b, int* out);
PYR_API pyr_status pyr_basis_form_degree(const pyr_basis* b, int* s, int* k);
PYR_API pyr_status pyr_basis_to_json(const pyr_basis* b, char** out);
PYR_API pyr_status pyr_basis_equal(const pyr_basis* a, const pyr_basis* b, int* equal);
/* points: CSV text with rows xi,eta,zeta. row_errors counts rejected points. */
PYR_API pyr_status pyr_basis_tabulate(const pyr_basis* b, const char* points, char** csv, int* row_errors);

/* Exact DOF-by-basis matrix; det_sign receives the sign of its determinant. */
PYR_API pyr_status pyr_vandermonde(int s, int k, pyr_format format, char** out, int* det_sign);

PYR_API void pyr_verify_options_default(pyr_verify_options* opt);
PYR_API pyr_status pyr_verify(const pyr_verify_options* opt, pyr_report** out);
PYR_API pyr_status pyr_counterexample(int degree, pyr_report** out);
PYR_API void pyr_report_destroy(pyr_report* r);
PYR_API pyr_status pyr_report_passed(const pyr_report* r, int* passed);
PYR_API pyr_status pyr_report_render(const pyr_report* r, pyr_format format, char** out);
/* Names of failed checks, one per line (empty when all passed). */
PYR_API pyr_status pyr_report_failures(const pyr_report* r, char** out);

#ifdef __cplusplus
}
#endif

#endif
