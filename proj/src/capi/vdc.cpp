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

#include "vdc/vdc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "core/arcs.hpp"
#include "core/averaging.hpp"
#include "core/error.hpp"
#include "core/expsum.hpp"
#include "core/kernels.hpp"
#include "core/lowerbound.hpp"
#include "core/oracles.hpp"
#include "core/poly.hpp"
#include "core/serialize.hpp"
#include "core/witness.hpp"

struct vdc_poly {
  vdc::OddPolynomial f;
};

struct vdc_cosine {
  vdc::SparseCosinePolynomial T;
};

struct vdc_scheme {
  vdc::AveragingScheme sc;
};

namespace {

using vdc::ErrorCode;

thread_local std::string g_last_error;

template <typename Body>
vdc_status guard(Body&& body) {
  try {
    body();
    g_last_error.clear();
    return VDC_OK;
  } catch (const vdc::Error& e) {
    g_last_error = e.what();
    return static_cast<vdc_status>(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown failure";
  }
  return VDC_ERR_INTERNAL;
}

void need(const void* ptr, const char* name) {
  vdc::require(ptr != nullptr, ErrorCode::kInvalidArgument, std::string(name) + " must not be NULL");
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename T>
T* copy_array(const std::vector<T>& v) {
  T* out = static_cast<T*>(std::malloc(std::max<std::size_t>(1, v.size()) * sizeof(T)));
  if (!out) throw std::bad_alloc();
  if (!v.empty()) std::memcpy(out, v.data(), v.size() * sizeof(T));
  return out;
}

void emit(char** json, const vdc::Json& doc) {
  if (json) *json = copy_string(doc.dump(2));
}

}  // namespace

extern "C" {

const char* vdc_version(void) { return "0.3.0"; }

const char* vdc_status_name(vdc_status status) {
  switch (status) {
    case VDC_OK: return "ok";
    case VDC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case VDC_ERR_DOMAIN: return "domain error";
    case VDC_ERR_EMPTY_RANGE: return "empty range";
    case VDC_ERR_CAP_EXCEEDED: return "cap exceeded";
    case VDC_ERR_PARSE: return "parse error";
    case VDC_ERR_VERIFICATION: return "verification failure";
    case VDC_ERR_NONCONVERGENCE: return "nonconvergence";
    case VDC_ERR_IO: return "i/o error";
    case VDC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* vdc_last_error(void) { return g_last_error.c_str(); }

void vdc_free(void* ptr) { std::free(ptr); }

// ---- polynomials ----

vdc_status vdc_poly_parse(const char* literal, vdc_poly** out) {
  return guard([&] {
    need(literal, "literal");
    need(out, "out");
    *out = new vdc_poly{vdc::OddPolynomial::parse(literal)};
  });
}

vdc_status vdc_poly_from_coeffs(const int64_t* coeffs, size_t count, vdc_poly** out) {
  return guard([&] {
    need(out, "out");
    vdc::require(count == 0 || coeffs != nullptr, ErrorCode::kInvalidArgument, "coeffs must not be NULL");
    *out = new vdc_poly{vdc::OddPolynomial::make(std::span<const std::int64_t>(coeffs, count))};
  });
}

void vdc_poly_free(vdc_poly* f) { delete f; }

int vdc_poly_degree(const vdc_poly* f) { return f ? f->f.degree() : 0; }

int vdc_poly_least_index(const vdc_poly* f) { return f ? f->f.least_index() : 0; }

vdc_status vdc_poly_info(const vdc_poly* f, char** json) {
  return guard([&] {
    need(f, "f");
    need(json, "json");
    emit(json, vdc::to_json(f->f));
  });
}

vdc_status vdc_poly_eval(const vdc_poly* f, int64_t x, char** decimal) {
  return guard([&] {
    need(f, "f");
    need(decimal, "decimal");
    *decimal = copy_string(f->f.eval(vdc::BigInt(x)).str());
  });
}

vdc_status vdc_poly_dilate(const vdc_poly* f, uint64_t d, vdc_poly** out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    vdc::require(d >= 1, ErrorCode::kInvalidArgument, "d must be positive");
    *out = new vdc_poly{f->f.dilate(vdc::BigInt(d))};
  });
}

vdc_status vdc_poly_values(const vdc_poly* f, uint64_t n, uint64_t d, uint64_t** values,
                           size_t* count, uint64_t* first_index) {
  return guard([&] {
    need(f, "f");
    need(values, "values");
    need(count, "count");
    const auto list = vdc::values_up_to(f->f, n, d);
    *values = copy_array(list.values);
    *count = list.values.size();
    if (first_index) *first_index = list.first_index;
  });
}

vdc_status vdc_poly_positive_values(const vdc_poly* f, uint64_t limit, uint64_t** values,
                                    size_t* count) {
  return guard([&] {
    need(f, "f");
    need(values, "values");
    need(count, "count");
    const auto list = vdc::positive_values_up_to(f->f, limit);
    *values = copy_array(list);
    *count = list.size();
  });
}

// ---- exponential sums ----

vdc_status vdc_reduced_sum(const vdc_poly* f, uint64_t d, int64_t a, uint64_t q, vdc_sum* out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    const auto r = vdc::reduced_sum(f->f, d, a, q);
    out->value = r.value;
    out->residual_imag = r.residual_imag;
  });
}

vdc_status vdc_reference_imag(const vdc_poly* f, uint64_t d, int64_t a, uint64_t q, double* out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    *out = vdc::reference_imag(f->f, d, a, q);
  });
}

vdc_status vdc_multiplier_sums(const vdc_poly* f, uint64_t d, uint64_t q, double** sums) {
  return guard([&] {
    need(f, "f");
    need(sums, "sums");
    *sums = copy_array(vdc::multiplier_sums(f->f, d, q));
  });
}

vdc_status vdc_estimate_c0(const vdc_poly* f, uint64_t q_max, unsigned threads, int with_rows,
                           double* c0, char** json) {
  return guard([&] {
    need(f, "f");
    const auto e = vdc::estimate_c0(f->f, q_max, threads);
    if (c0) *c0 = e.c0;
    emit(json, vdc::to_json(e, with_rows != 0));
  });
}

// ---- cosine polynomials ----

vdc_status vdc_fejer(uint64_t n, vdc_cosine** out) {
  return guard([&] {
    need(out, "out");
    *out = new vdc_cosine{vdc::fejer(n)};
  });
}

vdc_status vdc_fejer_value(uint64_t n, double x, double* out) {
  return guard([&] {
    need(out, "out");
    vdc::require(n >= 1, ErrorCode::kInvalidArgument, "n must be positive");
    *out = vdc::fejer_value(n, x);
  });
}

vdc_status vdc_surrogate(const vdc_poly* f, uint64_t n, uint64_t d, vdc_cosine** out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    *out = new vdc_cosine{vdc::build_surrogate(f->f, n, d)};
  });
}

vdc_status vdc_surrogate_norm(const vdc_poly* f, uint64_t n, uint64_t d, double* out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    *out = vdc::surrogate_norm(f->f, n, d);
  });
}

vdc_status vdc_major_arc_residual(const vdc_poly* f, uint64_t n, uint64_t d, int64_t a, uint64_t q,
                                  double kappa, double* out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    *out = vdc::major_arc_residual(f->f, n, d, a, q, kappa);
  });
}

vdc_status vdc_cosine_create(double b0, const uint64_t* freqs, const double* coeffs, size_t count,
                             vdc_cosine** out) {
  return guard([&] {
    need(out, "out");
    vdc::require(count == 0 || (freqs && coeffs), ErrorCode::kInvalidArgument,
                 "freqs and coeffs must not be NULL");
    std::vector<vdc::CosineTerm> terms(count);
    for (size_t i = 0; i < count; ++i) terms[i] = {freqs[i], coeffs[i]};
    *out = new vdc_cosine{vdc::SparseCosinePolynomial(b0, std::move(terms), vdc::Provenance::kOther)};
  });
}

void vdc_cosine_free(vdc_cosine* T) { delete T; }

size_t vdc_cosine_size(const vdc_cosine* T) { return T ? T->T.size() : 0; }

double vdc_cosine_b0(const vdc_cosine* T) { return T ? T->T.b0() : 0.0; }

uint64_t vdc_cosine_max_frequency(const vdc_cosine* T) { return T ? T->T.max_frequency() : 0; }

double vdc_cosine_coefficient_sum(const vdc_cosine* T) { return T ? T->T.coefficient_sum() : 0.0; }

vdc_status vdc_cosine_term(const vdc_cosine* T, size_t index, uint64_t* freq, double* coeff) {
  return guard([&] {
    need(T, "T");
    vdc::require(index < T->T.size(), ErrorCode::kInvalidArgument, "term index out of range");
    const auto& t = T->T.terms()[index];
    if (freq) *freq = t.freq;
    if (coeff) *coeff = t.coeff;
  });
}

vdc_status vdc_cosine_eval(const vdc_cosine* T, double x, double* out) {
  return guard([&] {
    need(T, "T");
    need(out, "out");
    *out = T->T.eval(x);
  });
}

vdc_status vdc_cosine_eval_rational(const vdc_cosine* T, int64_t a, uint64_t q, double* out) {
  return guard([&] {
    need(T, "T");
    need(out, "out");
    *out = T->T.eval_rational(a, q);
  });
}

vdc_status vdc_cosine_eval_grid(const vdc_cosine* T, uint64_t points, uint64_t first, size_t count,
                                double* out) {
  return guard([&] {
    need(T, "T");
    vdc::require(count == 0 || out != nullptr, ErrorCode::kInvalidArgument, "out must not be NULL");
    T->T.eval_grid(points, first, std::span<double>(out, count));
  });
}

vdc_status vdc_cosine_to_json(const vdc_cosine* T, char** json) {
  return guard([&] {
    need(T, "T");
    need(json, "json");
    emit(json, vdc::cosine_to_json(T->T));
  });
}

vdc_status vdc_cosine_from_json(const char* json, vdc_cosine** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new vdc_cosine{vdc::cosine_from_json(vdc::parse_json(json))};
  });
}

vdc_status vdc_scan_min(const vdc_cosine* T, uint64_t grid_points, int refine_iters,
                        unsigned threads, double* refined_min, char** json) {
  return guard([&] {
    need(T, "T");
    const auto r = vdc::scan_min(T->T, grid_points, refine_iters, threads);
    if (refined_min) *refined_min = r.refined_min;
    emit(json, vdc::to_json(r));
  });
}

// ---- arcs ----

vdc_status vdc_classify(double x, uint64_t Q, double R, char** json) {
  return guard([&] {
    need(json, "json");
    emit(json, vdc::to_json(vdc::classify(x, Q, R)));
  });
}

vdc_status vdc_classify_rational(int64_t num, uint64_t den, uint64_t Q, double R, char** json) {
  return guard([&] {
    need(json, "json");
    vdc::require(den >= 1, ErrorCode::kInvalidArgument, "denominator must be positive");
    const vdc::Rational x{vdc::BigInt(num), vdc::BigInt(den)};
    emit(json, vdc::to_json(vdc::classify(x, Q, vdc::exact_rational(R))));
  });
}

// ---- averaging ----

vdc_status vdc_tau(uint64_t d, uint64_t q, double alpha, double beta, int l, double* out) {
  return guard([&] {
    need(out, "out");
    *out = vdc::tau(d, q, alpha, beta, l);
  });
}

vdc_status vdc_threshold_pstar(double alpha, double beta, uint64_t* out) {
  return guard([&] {
    need(out, "out");
    *out = vdc::threshold_pstar(alpha, beta);
  });
}

vdc_status vdc_threshold_astar(double alpha, double beta, int l, int* out) {
  return guard([&] {
    need(out, "out");
    *out = vdc::threshold_astar(alpha, beta, l);
  });
}

vdc_status vdc_exponents_for_prime(uint64_t p, int s, double alpha, double beta, int l, int* out) {
  return guard([&] {
    need(out, "out");
    const auto a = vdc::exponents_for_prime(p, s, alpha, beta, l);
    std::copy(a.begin(), a.end(), out);
  });
}

vdc_status vdc_scheme_build(const vdc_poly* f, double delta, double c0, uint64_t cap,
                            vdc_scheme** out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    vdc::SchemeOptions options;
    if (cap) options.cap = cap;
    *out = new vdc_scheme{vdc::build_scheme(delta, f->f, c0, options)};
  });
}

vdc_status vdc_scheme_build_desk(const vdc_poly* f, uint64_t n, double delta, double c0,
                                 uint64_t principal_qmax, uint64_t min_terms, int max_levels,
                                 vdc_scheme** out) {
  return guard([&] {
    need(f, "f");
    need(out, "out");
    vdc::DeskOptions options;
    options.delta = delta;
    options.c0 = c0;
    if (principal_qmax) options.principal_qmax = principal_qmax;
    if (min_terms) options.min_terms = min_terms;
    if (max_levels >= 0) options.max_levels = max_levels;
    *out = new vdc_scheme{vdc::build_desk_scheme(f->f, n, options)};
  });
}

void vdc_scheme_free(vdc_scheme* sc) { delete sc; }

int vdc_scheme_s(const vdc_scheme* sc) { return sc ? sc->sc.s : -1; }

double vdc_scheme_delta(const vdc_scheme* sc) { return sc ? sc->sc.delta : 0.0; }

vdc_status vdc_scheme_to_json(const vdc_scheme* sc, char** json) {
  return guard([&] {
    need(sc, "scheme");
    need(json, "json");
    emit(json, vdc::scheme_to_json(sc->sc));
  });
}

vdc_status vdc_scheme_from_json(const char* json, vdc_scheme** out) {
  return guard([&] {
    need(json, "json");
    need(out, "out");
    *out = new vdc_scheme{vdc::scheme_from_json(vdc::parse_json(json))};
  });
}

vdc_status vdc_scheme_averaged_tau(const vdc_scheme* sc, uint64_t q, double* out) {
  return guard([&] {
    need(sc, "scheme");
    need(out, "out");
    *out = sc->sc.averaged_tau(q);
  });
}

vdc_status vdc_scheme_verify(const vdc_scheme* sc, uint64_t q_max, unsigned threads, int* pass,
                             char** json) {
  return guard([&] {
    need(sc, "scheme");
    const auto v = vdc::verify_scheme(sc->sc, q_max, threads);
    if (pass) *pass = v.pass ? 1 : 0;
    emit(json, vdc::to_json(v));
  });
}

vdc_status vdc_scheme_certificate(const vdc_scheme* sc, uint64_t q, char** json) {
  return guard([&] {
    need(sc, "scheme");
    need(json, "json");
    emit(json, vdc::to_json(vdc::reduction_certificate(sc->sc, q)));
  });
}

vdc_status vdc_lemma_suite(vdc_lemma which, double alpha, double beta, int l, uint64_t p_max,
                           int s_max, uint64_t* failures, char** json) {
  return guard([&] {
    vdc::LemmaSuiteReport r;
    switch (which) {
      case VDC_LEMMA_LARGE_PRIMES: r = vdc::check_large_prime_lemma(alpha, beta, l, p_max, s_max); break;
      case VDC_LEMMA_SMALL_PRIMES: r = vdc::check_small_prime_lemma(alpha, beta, l, p_max, s_max); break;
      case VDC_LEMMA_LADDERS: r = vdc::check_ladder_lemma(alpha, beta, l, p_max, s_max); break;
      default: vdc::fail(ErrorCode::kInvalidArgument, "unknown lemma suite");
    }
    if (failures) *failures = r.failures;
    emit(json, vdc::to_json(r));
  });
}

// ---- witness ----

vdc_status vdc_paper_parameters(const vdc_poly* f, double delta, double c5, double c6, double c7,
                                char** json) {
  return guard([&] {
    need(f, "f");
    need(json, "json");
    emit(json, vdc::to_json(vdc::paper_parameters(delta, f->f, {c5, c6, c7})));
  });
}

vdc_status vdc_witness_build(const vdc_poly* f, double delta, const vdc_scheme* sc, uint64_t n,
                             vdc_cosine** out, char** report) {
  return guard([&] {
    need(f, "f");
    need(sc, "scheme");
    need(out, "out");
    auto w = vdc::build_witness(f->f, delta, sc->sc, n);
    emit(report, vdc::to_json(w.report));
    *out = new vdc_cosine{std::move(w.T)};
  });
}

vdc_status vdc_spectrum_in_values(const vdc_poly* f, const vdc_cosine* T, int* out) {
  return guard([&] {
    need(f, "f");
    need(T, "T");
    need(out, "out");
    *out = vdc::spectrum_in_values(f->f, T->T) ? 1 : 0;
  });
}

vdc_status vdc_min_passing_delta(const vdc_poly* f, const vdc_scheme* sc, uint64_t n,
                                 uint64_t grid_points, double tolerance, unsigned threads,
                                 double* delta, char** json) {
  return guard([&] {
    need(f, "f");
    need(sc, "scheme");
    const auto r = vdc::min_passing_delta(f->f, sc->sc, n, grid_points, tolerance, threads);
    if (delta) *delta = r.delta;
    emit(json, vdc::to_json(r));
  });
}

// ---- oracles ----

vdc_status vdc_gamma_bracket(const uint64_t* spectrum, size_t count, uint64_t grid_points,
                             int max_rounds, unsigned threads, double* lower, double* upper,
                             char** json) {
  return guard([&] {
    vdc::require(count == 0 || spectrum != nullptr, ErrorCode::kInvalidArgument,
                 "spectrum must not be NULL");
    vdc::BracketOptions options;
    options.grid_points = grid_points;
    if (max_rounds > 0) options.max_rounds = max_rounds;
    options.threads = threads;
    const auto b = vdc::gamma_plus_bracket(std::vector<std::uint64_t>(spectrum, spectrum + count), options);
    if (lower) *lower = b.lower;
    if (upper) *upper = b.upper;
    emit(json, vdc::to_json(b));
  });
}

vdc_status vdc_max_diff_avoiding(const vdc_poly* f, uint64_t N, uint64_t cap, uint64_t* size,
                                 uint64_t** set, char** json) {
  return guard([&] {
    need(f, "f");
    const auto r = vdc::max_diff_avoiding(f->f, N, cap ? cap : 64);
    if (size) *size = r.size();
    if (set) *set = copy_array(r.elements);
    emit(json, vdc::to_json(r));
  });
}

// ---- lower bound ----

vdc_status vdc_lower_classes(uint64_t p, int k, uint64_t beta, int enforce_lemma, char** json) {
  return guard([&] {
    need(json, "json");
    const auto check = enforce_lemma ? vdc::LemmaCheck::kEnforce : vdc::LemmaCheck::kReport;
    emit(json, vdc::to_json(vdc::build_classes(p, k, beta, check)));
  });
}

vdc_status vdc_prime_is_usable(uint64_t p, int k, uint64_t beta, int* out) {
  return guard([&] {
    need(out, "out");
    *out = vdc::prime_is_usable(p, k, beta) ? 1 : 0;
  });
}

vdc_status vdc_lower_check(const vdc_cosine* T, const vdc_poly* f, uint64_t p, int* pass,
                           char** json) {
  return guard([&] {
    need(T, "T");
    need(f, "f");
    const auto r = vdc::prime_inequality_check(T->T, f->f, p);
    if (pass) *pass = r.pass ? 1 : 0;
    emit(json, vdc::to_json(r));
  });
}

vdc_status vdc_lower_bound(uint64_t n, int k, uint64_t m_cap, double* bound, char** json) {
  return guard([&] {
    const auto r = vdc::gamma_lower_bound(n, k, m_cap);
    if (bound) *bound = r.bound;
    emit(json, vdc::to_json(r));
  });
}

}  // extern "C"
