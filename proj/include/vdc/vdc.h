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

#ifndef VDC_VDC_H_
#define VDC_VDC_H_

// C interface to the vdcwitness library.
//
// Objects are opaque handles released with their matching *_free function.
// Every fallible call returns a vdc_status; on failure vdc_last_error() holds
// a message for the calling thread. Strings and arrays handed out by the
// library are allocated with malloc and released with vdc_free.

#include <stddef.h>
#include <stdint.h>

#if defined(VDC_BUILDING_LIBRARY)
#define VDC_API __attribute__((visibility("default")))
#else
#define VDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum vdc_status {
  VDC_OK = 0,
  VDC_ERR_INVALID_ARGUMENT = 1,
  VDC_ERR_DOMAIN = 2,
  VDC_ERR_EMPTY_RANGE = 3,
  VDC_ERR_CAP_EXCEEDED = 4,
  VDC_ERR_PARSE = 5,
  VDC_ERR_VERIFICATION = 6,
  VDC_ERR_NONCONVERGENCE = 7,
  VDC_ERR_IO = 8,
  VDC_ERR_INTERNAL = 9
} vdc_status;

typedef struct vdc_poly vdc_poly;      // odd integer polynomial
typedef struct vdc_cosine vdc_cosine;  // sparse cosine polynomial
typedef struct vdc_scheme vdc_scheme;  // averaging scheme

VDC_API const char* vdc_version(void);
VDC_API const char* vdc_status_name(vdc_status status);
VDC_API const char* vdc_last_error(void);
VDC_API void vdc_free(void* ptr);

// ---- polynomials ---------------------------------------------------------

// Comma separated coefficients, lowest power first: "2,0,3" is 3x^3 + 2x.
VDC_API vdc_status vdc_poly_parse(const char* literal, vdc_poly** out);
// coeffs[i] is the coefficient of x^(i+1).
VDC_API vdc_status vdc_poly_from_coeffs(const int64_t* coeffs, size_t count, vdc_poly** out);
VDC_API void vdc_poly_free(vdc_poly* f);
VDC_API int vdc_poly_degree(const vdc_poly* f);
VDC_API int vdc_poly_least_index(const vdc_poly* f);
// JSON object with literal, readable form, degree, least index, content, leading coefficient.
VDC_API vdc_status vdc_poly_info(const vdc_poly* f, char** json);
// f(x) as a decimal string.
VDC_API vdc_status vdc_poly_eval(const vdc_poly* f, int64_t x, char** decimal);
// g(x) = f(d x).
VDC_API vdc_status vdc_poly_dilate(const vdc_poly* f, uint64_t d, vdc_poly** out);
// Increasing values f(d j) <= n past the non-monotone prefix; *first_index is the first j kept.
VDC_API vdc_status vdc_poly_values(const vdc_poly* f, uint64_t n, uint64_t d, uint64_t** values,
                                   size_t* count, uint64_t* first_index);
// Every positive value f(j) <= limit, j >= 1, sorted and distinct.
VDC_API vdc_status vdc_poly_positive_values(const vdc_poly* f, uint64_t limit, uint64_t** values,
                                            size_t* count);

// ---- complete exponential sums --------------------------------------------

typedef struct vdc_sum {
  double value;          // real part
  double residual_imag;  // imaginary part left after symmetric accumulation
} vdc_sum;

// S_d(af, q) = sum_{s<q} e(a f(d s) / q); d = 1 gives the complete sum.
VDC_API vdc_status vdc_reduced_sum(const vdc_poly* f, uint64_t d, int64_t a, uint64_t q,
                                   vdc_sum* out);
// Imaginary part accumulated naively in index order.
VDC_API vdc_status vdc_reference_imag(const vdc_poly* f, uint64_t d, int64_t a, uint64_t q,
                                      double* out);
// Real parts of S_d(af, q) for all a in [0, q); *sums receives q values.
VDC_API vdc_status vdc_multiplier_sums(const vdc_poly* f, uint64_t d, uint64_t q, double** sums);
// Empirical constant of the complete-sum bound over 2 <= q <= q_max. json may
// be NULL; with_rows adds one row per q.
VDC_API vdc_status vdc_estimate_c0(const vdc_poly* f, uint64_t q_max, unsigned threads,
                                   int with_rows, double* c0, char** json);

// ---- cosine polynomials ---------------------------------------------------

VDC_API vdc_status vdc_fejer(uint64_t n, vdc_cosine** out);
VDC_API vdc_status vdc_fejer_value(uint64_t n, double x, double* out);
VDC_API vdc_status vdc_surrogate(const vdc_poly* f, uint64_t n, uint64_t d, vdc_cosine** out);
VDC_API vdc_status vdc_surrogate_norm(const vdc_poly* f, uint64_t n, uint64_t d, double* out);
// G_{n,d}(a/q + kappa) - S_d(af, q)/q * F_n(kappa).
VDC_API vdc_status vdc_major_arc_residual(const vdc_poly* f, uint64_t n, uint64_t d, int64_t a,
                                          uint64_t q, double kappa, double* out);
VDC_API vdc_status vdc_cosine_create(double b0, const uint64_t* freqs, const double* coeffs,
                                     size_t count, vdc_cosine** out);
VDC_API void vdc_cosine_free(vdc_cosine* T);
VDC_API size_t vdc_cosine_size(const vdc_cosine* T);
VDC_API double vdc_cosine_b0(const vdc_cosine* T);
VDC_API uint64_t vdc_cosine_max_frequency(const vdc_cosine* T);
VDC_API double vdc_cosine_coefficient_sum(const vdc_cosine* T);
VDC_API vdc_status vdc_cosine_term(const vdc_cosine* T, size_t index, uint64_t* freq,
                                   double* coeff);
VDC_API vdc_status vdc_cosine_eval(const vdc_cosine* T, double x, double* out);
VDC_API vdc_status vdc_cosine_eval_rational(const vdc_cosine* T, int64_t a, uint64_t q,
                                            double* out);
// Values at (first + i) / points for i < count.
VDC_API vdc_status vdc_cosine_eval_grid(const vdc_cosine* T, uint64_t points, uint64_t first,
                                        size_t count, double* out);
VDC_API vdc_status vdc_cosine_to_json(const vdc_cosine* T, char** json);
VDC_API vdc_status vdc_cosine_from_json(const char* json, vdc_cosine** out);
// Grid scan plus golden-section refinement. json may be NULL.
VDC_API vdc_status vdc_scan_min(const vdc_cosine* T, uint64_t grid_points, int refine_iters,
                                unsigned threads, double* refined_min, char** json);

// ---- major and minor arcs -------------------------------------------------

// Classifies x in [0, 1) against denominators q <= Q at width 1/(qR).
VDC_API vdc_status vdc_classify(double x, uint64_t Q, double R, char** json);
// Same for the exact rational num/den.
VDC_API vdc_status vdc_classify_rational(int64_t num, uint64_t den, uint64_t Q, double R,
                                         char** json);

// ---- averaging scheme -----------------------------------------------------

VDC_API vdc_status vdc_tau(uint64_t d, uint64_t q, double alpha, double beta, int l, double* out);
VDC_API vdc_status vdc_threshold_pstar(double alpha, double beta, uint64_t* out);
VDC_API vdc_status vdc_threshold_astar(double alpha, double beta, int l, int* out);
// Writes s + 1 exponents a_0..a_s into out.
VDC_API vdc_status vdc_exponents_for_prime(uint64_t p, int s, double alpha, double beta, int l,
                                           int* out);
// cap bounds 2^s; 0 selects the default.
VDC_API vdc_status vdc_scheme_build(const vdc_poly* f, double delta, double c0, uint64_t cap,
                                    vdc_scheme** out);
// Greedy desk-scale chain of moduli for a given n.
VDC_API vdc_status vdc_scheme_build_desk(const vdc_poly* f, uint64_t n, double delta, double c0,
                                         uint64_t principal_qmax, uint64_t min_terms,
                                         int max_levels, vdc_scheme** out);
VDC_API void vdc_scheme_free(vdc_scheme* sc);
VDC_API int vdc_scheme_s(const vdc_scheme* sc);
VDC_API double vdc_scheme_delta(const vdc_scheme* sc);
VDC_API vdc_status vdc_scheme_to_json(const vdc_scheme* sc, char** json);
VDC_API vdc_status vdc_scheme_from_json(const char* json, vdc_scheme** out);
VDC_API vdc_status vdc_scheme_averaged_tau(const vdc_scheme* sc, uint64_t q, double* out);
// Exhaustive check over 1 <= q <= q_max; json may be NULL.
VDC_API vdc_status vdc_scheme_verify(const vdc_scheme* sc, uint64_t q_max, unsigned threads,
                                     int* pass, char** json);
VDC_API vdc_status vdc_scheme_certificate(const vdc_scheme* sc, uint64_t q, char** json);

typedef enum vdc_lemma {
  VDC_LEMMA_LARGE_PRIMES = 2,
  VDC_LEMMA_SMALL_PRIMES = 3,
  VDC_LEMMA_LADDERS = 4
} vdc_lemma;

VDC_API vdc_status vdc_lemma_suite(vdc_lemma which, double alpha, double beta, int l,
                                   uint64_t p_max, int s_max, uint64_t* failures, char** json);

// ---- witness --------------------------------------------------------------

VDC_API vdc_status vdc_paper_parameters(const vdc_poly* f, double delta, double c5, double c6,
                                        double c7, char** json);
// T = delta + ((1 - delta)/Lambda) sum_j lambda^j G_{n,d_j}; report may be NULL.
VDC_API vdc_status vdc_witness_build(const vdc_poly* f, double delta, const vdc_scheme* sc,
                                     uint64_t n, vdc_cosine** out, char** report);
// True when every frequency of T is a value of f.
VDC_API vdc_status vdc_spectrum_in_values(const vdc_poly* f, const vdc_cosine* T, int* out);
VDC_API vdc_status vdc_min_passing_delta(const vdc_poly* f, const vdc_scheme* sc, uint64_t n,
                                         uint64_t grid_points, double tolerance, unsigned threads,
                                         double* delta, char** json);

// ---- oracles --------------------------------------------------------------

// grid_points = 0 picks 4 * max(spectrum). json may be NULL.
VDC_API vdc_status vdc_gamma_bracket(const uint64_t* spectrum, size_t count, uint64_t grid_points,
                                     int max_rounds, unsigned threads, double* lower,
                                     double* upper, char** json);
// Writes the set into a malloc'd array of *size elements when set is not NULL.
VDC_API vdc_status vdc_max_diff_avoiding(const vdc_poly* f, uint64_t N, uint64_t cap,
                                         uint64_t* size, uint64_t** set, char** json);

// ---- lower bound ----------------------------------------------------------

// With enforce_lemma != 0 a class system whose smallest sum exceeds
// -sqrt(s/(k-2)) fails with VDC_VERIFICATION; otherwise the JSON reports it
// in "lemma_holds".
VDC_API vdc_status vdc_lower_classes(uint64_t p, int k, uint64_t beta, int enforce_lemma,
                                     char** json);
VDC_API vdc_status vdc_prime_is_usable(uint64_t p, int k, uint64_t beta, int* out);
// f must be a monomial beta x^k.
VDC_API vdc_status vdc_lower_check(const vdc_cosine* T, const vdc_poly* f, uint64_t p, int* pass,
                                   char** json);
VDC_API vdc_status vdc_lower_bound(uint64_t n, int k, uint64_t m_cap, double* bound, char** json);

#ifdef __cplusplus
}
#endif

#endif  // VDC_VDC_H_
