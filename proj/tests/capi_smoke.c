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

/* Exercises the C interface from plain C. */
#include "pyramid/pyramid.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

int main(void) {
  int n = 0;
  EXPECT(pyr_dimension(0, 2, &n) == PYR_OK && n == 15);
  EXPECT(pyr_dimension(3, 3, &n) == PYR_OK && n == 27);
  EXPECT(pyr_dimension(5, 1, &n) == PYR_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(pyr_last_error()) > 0);
  EXPECT(pyr_dimension(0, 1, NULL) == PYR_ERR_INVALID_ARGUMENT);

  pyr_basis* b = NULL;
  EXPECT(pyr_basis_create(1, 1, &b) == PYR_OK && b != NULL);
  EXPECT(pyr_basis_size(b, &n) == PYR_OK && n == 8);
  int s = -1, k = -1;
  EXPECT(pyr_basis_form_degree(b, &s, &k) == PYR_OK && s == 1 && k == 1);

  char* json = NULL;
  EXPECT(pyr_basis_to_json(b, &json) == PYR_OK && json != NULL);
  pyr_basis* back = NULL;
  EXPECT(pyr_basis_from_json(json, &back) == PYR_OK);
  int equal = 0;
  EXPECT(pyr_basis_equal(b, back, &equal) == PYR_OK && equal == 1);
  pyr_string_free(json);
  pyr_basis_destroy(back);

  pyr_basis* bad = NULL;
  EXPECT(pyr_basis_from_json("{\"s\":", &bad) == PYR_ERR_INVALID_ARGUMENT && bad == NULL);

  char* csv = NULL;
  int row_errors = -1;
  EXPECT(pyr_basis_tabulate(b, "0,0,1\n2,0,0\n", &csv, &row_errors) == PYR_OK);
  EXPECT(row_errors == 1);
  EXPECT(csv && strstr(csv, "trace-only") != NULL);
  pyr_string_free(csv);
  pyr_basis_destroy(b);

  char* v = NULL;
  int sign = 0;
  EXPECT(pyr_vandermonde(3, 1, PYR_FORMAT_JSON, &v, &sign) == PYR_OK && sign == 1);
  EXPECT(v && strstr(v, "\"1/3\"") != NULL);
  pyr_string_free(v);
  EXPECT(pyr_vandermonde(0, 0, PYR_FORMAT_JSON, &v, &sign) == PYR_ERR_INVALID_ARGUMENT);

  pyr_report* r = NULL;
  int passed = 0;
  EXPECT(pyr_counterexample(4, &r) == PYR_OK);
  EXPECT(pyr_report_passed(r, &passed) == PYR_OK && passed == 1);
  char* text = NULL;
  EXPECT(pyr_report_render(r, PYR_FORMAT_TEXT, &text) == PYR_OK && strstr(text, "counterexample") != NULL);
  pyr_string_free(text);
  pyr_report_destroy(r);

  pyr_verify_options opt;
  pyr_verify_options_default(&opt);
  EXPECT(opt.max_order == 4 && opt.quad_points == 0);
  opt.max_order = 0;
  EXPECT(pyr_verify(&opt, &r) == PYR_ERR_INVALID_ARGUMENT && r == NULL);

  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  else printf("C interface smoke test passed (library %s)\n", pyr_version());
  return failures ? 1 : 0;
}
