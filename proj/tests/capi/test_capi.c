// Copyright 2026 The vdcwitness Authors.
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

// Exercises the C interface from plain C. Each expectation failure is printed
// and counted; the exit status is the number of failures.

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "vdc/vdc.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expectation failed: %s\n", __FILE__, \
              __LINE__, #cond);                                       \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define EXPECT_OK(call) EXPECT((call) == VDC_OK)

static void test_polynomials(void) {
  vdc_poly* f = NULL;
  EXPECT_OK(vdc_poly_parse("2,0,3", &f));
  EXPECT(vdc_poly_degree(f) == 3);
  EXPECT(vdc_poly_least_index(f) == 1);

  char* text = NULL;
  EXPECT_OK(vdc_poly_eval(f, 2, &text));
  EXPECT(text && strcmp(text, "28") == 0);
  vdc_free(text);

  vdc_poly* g = NULL;
  EXPECT_OK(vdc_poly_dilate(f, 3, &g));
  EXPECT_OK(vdc_poly_info(g, &text));
  EXPECT(text && strstr(text, "\"content\"") != NULL);
  vdc_free(text);
  vdc_poly_free(g);
  vdc_poly_free(f);

  const int64_t coeffs[] = {-1, 0, 1};
  EXPECT_OK(vdc_poly_from_coeffs(coeffs, 3, &f));
  uint64_t* values = NULL;
  size_t count = 0;
  uint64_t first = 0;
  EXPECT_OK(vdc_poly_values(f, 30, 1, &values, &count, &first));
  EXPECT(count == 2 && values[0] == 6 && values[1] == 24 && first == 2);
  vdc_free(values);
  vdc_poly_free(f);

  EXPECT(vdc_poly_parse("0,1,0", &f) == VDC_ERR_INVALID_ARGUMENT);
  EXPECT(strlen(vdc_last_error()) > 0);
  EXPECT(vdc_poly_parse(NULL, &f) == VDC_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(vdc_status_name(VDC_ERR_VERIFICATION), "verification failure") == 0);
}

static void test_sums(void) {
  vdc_poly* f = NULL;
  EXPECT_OK(vdc_poly_parse("0,0,1", &f));
  vdc_sum s;
  EXPECT_OK(vdc_reduced_sum(f, 1, 1, 9, &s));
  EXPECT(fabs(s.value - 3.0 * (1.0 + 2.0 * cos(2.0 * M_PI / 9.0))) < 1e-12);
  EXPECT(s.residual_imag == 0.0);
  EXPECT_OK(vdc_reduced_sum(f, 2, 1, 8, &s));
  EXPECT(s.value == 8.0);

  double* sums = NULL;
  EXPECT_OK(vdc_multiplier_sums(f, 1, 9, &sums));
  EXPECT(fabs(sums[1] - 7.596266658713868) < 1e-9);
  vdc_free(sums);

  double c0 = 0.0;
  EXPECT_OK(vdc_estimate_c0(f, 100, 1, 0, &c0, NULL));
  EXPECT(c0 > 1.0 && c0 < 4.0);
  vdc_poly_free(f);
}

static void test_cosines(void) {
  vdc_cosine* F = NULL;
  EXPECT_OK(vdc_fejer(2, &F));
  double v = 1.0;
  EXPECT_OK(vdc_cosine_eval(F, 0.5, &v));
  EXPECT(fabs(v) < 1e-15);
  EXPECT_OK(vdc_cosine_eval_rational(F, 1, 2, &v));
  EXPECT(fabs(v) < 1e-15);
  vdc_cosine_free(F);

  vdc_poly* f = NULL;
  EXPECT_OK(vdc_poly_parse("0,0,1", &f));
  double K = 0.0;
  EXPECT_OK(vdc_surrogate_norm(f, 1000, 1, &K));
  EXPECT(fabs(K - 0.98505) < 1e-12);
  vdc_cosine* G = NULL;
  EXPECT(vdc_surrogate(f, 7, 2, &G) == VDC_ERR_EMPTY_RANGE);
  EXPECT_OK(vdc_surrogate(f, 1000, 1, &G));
  EXPECT_OK(vdc_cosine_eval(G, 0.0, &v));
  EXPECT(fabs(v - 1.0) < 1e-12);
  EXPECT(vdc_cosine_b0(G) == 0.0);

  char* json = NULL;
  EXPECT_OK(vdc_cosine_to_json(G, &json));
  vdc_cosine* back = NULL;
  EXPECT_OK(vdc_cosine_from_json(json, &back));
  vdc_free(json);
  EXPECT(vdc_cosine_size(back) == vdc_cosine_size(G));
  double a = 0.0, b = 0.0;
  EXPECT_OK(vdc_cosine_eval(G, 0.123, &a));
  EXPECT_OK(vdc_cosine_eval(back, 0.123, &b));
  EXPECT(a == b);
  vdc_cosine_free(back);
  EXPECT(vdc_cosine_from_json("{", &back) == VDC_ERR_PARSE);

  double grid[4];
  EXPECT_OK(vdc_cosine_eval_grid(G, 4, 0, 4, grid));
  EXPECT(fabs(grid[0] - 1.0) < 1e-12);
  vdc_cosine_free(G);

  const uint64_t freqs[] = {1};
  const double coeffs[] = {0.6};
  vdc_cosine* T = NULL;
  EXPECT_OK(vdc_cosine_create(0.4, freqs, coeffs, 1, &T));
  double m = 0.0;
  EXPECT_OK(vdc_scan_min(T, 1000, 60, 1, &m, NULL));
  EXPECT(fabs(m + 0.2) < 1e-12);
  vdc_cosine_free(T);
  vdc_poly_free(f);
}

static void test_arcs(void) {
  char* json = NULL;
  EXPECT_OK(vdc_classify_rational(1, 2, 2, 10.0, &json));
  EXPECT(json && strstr(json, "major") != NULL);
  vdc_free(json);
  EXPECT_OK(vdc_classify(0.6180339887, 5, 1e6, &json));
  EXPECT(json && strstr(json, "minor") != NULL);
  vdc_free(json);
  EXPECT(vdc_classify(0.3, 10, 5.0, &json) == VDC_ERR_INVALID_ARGUMENT);
}

static void test_scheme_and_witness(void) {
  double t = 0.0;
  EXPECT_OK(vdc_tau(1, 64, 1.0, 1.0 / 3.0, 3, &t));
  EXPECT(fabs(t + 0.25) < 1e-14);
  uint64_t pstar = 0;
  EXPECT_OK(vdc_threshold_pstar(1.0, 1.0 / 3.0, &pstar));
  EXPECT(pstar == 5);
  int ladder[4];
  EXPECT_OK(vdc_exponents_for_prime(7, 3, 1.0, 1.0 / 3.0, 3, ladder));
  EXPECT(ladder[0] == 0 && ladder[1] == 1 && ladder[2] == 2 && ladder[3] == 3);

  vdc_poly* f = NULL;
  EXPECT_OK(vdc_poly_parse("0,0,1", &f));
  vdc_scheme* sc = NULL;
  EXPECT_OK(vdc_scheme_build(f, 0.5, 2.86, 0, &sc));
  EXPECT(vdc_scheme_s(sc) == 15);
  int pass = 0;
  EXPECT_OK(vdc_scheme_verify(sc, 1000, 1, &pass, NULL));
  EXPECT(pass == 1);
  char* json = NULL;
  EXPECT_OK(vdc_scheme_to_json(sc, &json));
  vdc_scheme* back = NULL;
  EXPECT_OK(vdc_scheme_from_json(json, &back));
  vdc_free(json);
  double x = 0.0, y = 0.0;
  EXPECT_OK(vdc_scheme_averaged_tau(sc, 32771, &x));
  EXPECT_OK(vdc_scheme_averaged_tau(back, 32771, &y));
  EXPECT(x == y);
  vdc_scheme_free(back);
  vdc_scheme_free(sc);
  EXPECT(vdc_scheme_build(f, 0.3, 2.86, 1024, &sc) == VDC_ERR_CAP_EXCEEDED);

  uint64_t lemma_failures = 1;
  EXPECT_OK(vdc_lemma_suite(VDC_LEMMA_LADDERS, 2.86, 1.0 / 3.0, 3, 100, 4, &lemma_failures, NULL));
  EXPECT(lemma_failures == 0);

  EXPECT_OK(vdc_scheme_build_desk(f, 100000, 0.3, 1.0, 200, 4, 8, &sc));
  vdc_cosine* T = NULL;
  EXPECT_OK(vdc_witness_build(f, 0.4, sc, 100000, &T, &json));
  EXPECT(vdc_cosine_b0(T) == 0.4);
  EXPECT(fabs(vdc_cosine_coefficient_sum(T) - 1.0) < 1e-12);
  vdc_free(json);
  int inside = 0;
  EXPECT_OK(vdc_spectrum_in_values(f, T, &inside));
  EXPECT(inside == 1);
  vdc_cosine_free(T);
  vdc_scheme_free(sc);
  vdc_poly_free(f);
}

static void test_oracles_and_lower(void) {
  const uint64_t spectrum[] = {1};
  double lower = 0.0, upper = 0.0;
  EXPECT_OK(vdc_gamma_bracket(spectrum, 1, 0, 8, 1, &lower, &upper, NULL));
  EXPECT(fabs(lower - 0.5) < 1e-6 && fabs(upper - 0.5) < 1e-6);

  vdc_poly* f = NULL;
  EXPECT_OK(vdc_poly_parse("0,0,1", &f));
  uint64_t size = 0;
  uint64_t* set = NULL;
  EXPECT_OK(vdc_max_diff_avoiding(f, 10, 64, &size, &set, NULL));
  EXPECT(size == 5);
  vdc_free(set);
  EXPECT(vdc_max_diff_avoiding(f, 100, 64, &size, NULL, NULL) == VDC_ERR_CAP_EXCEEDED);

  char* json = NULL;
  EXPECT_OK(vdc_lower_classes(7, 3, 1, 1, &json));
  EXPECT(json && strstr(json, "\"negative_index\": 2") != NULL);
  vdc_free(json);
  EXPECT(vdc_lower_classes(19, 3, 1, 1, &json) == VDC_ERR_VERIFICATION);
  EXPECT_OK(vdc_lower_classes(19, 3, 1, 0, &json));
  EXPECT(json && strstr(json, "\"lemma_holds\": false") != NULL);
  vdc_free(json);

  int usable = 0;
  EXPECT_OK(vdc_prime_is_usable(7, 3, 1, &usable));
  EXPECT(usable == 1);

  const uint64_t freqs[] = {343};
  const double coeffs[] = {0.5};
  vdc_cosine* T = NULL;
  EXPECT_OK(vdc_cosine_create(0.5, freqs, coeffs, 1, &T));
  int pass = 0;
  EXPECT_OK(vdc_lower_check(T, f, 7, &pass, NULL));
  EXPECT(pass == 1);
  vdc_cosine_free(T);

  double bound = 1.0;
  EXPECT_OK(vdc_lower_bound(UINT64_C(1) << 62, 3, 100, &bound, NULL));
  EXPECT(bound == 0.0);
  vdc_poly_free(f);
}

int main(void) {
  EXPECT(strlen(vdc_version()) > 0);
  test_polynomials();
  test_sums();
  test_cosines();
  test_arcs();
  test_scheme_and_witness();
  test_oracles_and_lower();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
  } else {
    printf("all C API expectations passed\n");
  }
  return failures;
}
