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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/poly.hpp"

namespace vdc {

// tau(d, q) = 1 if q | d^l, else max(-alpha r^-beta, -1) with r = q / gcd(q, d^l).
double tau(std::uint64_t d, std::uint64_t q, double alpha, double beta, int l);

// tau* and tau restricted to prime powers: d = p^a, q = p^k.
double tau_star_prime_power(std::uint64_t p, int a, int k, double alpha, double beta, int l);
double tau_prime_power(std::uint64_t p, int a, int k, double alpha, double beta, int l);

// Smallest prime p with 2^-beta >= (alpha + 1) / (alpha + p^beta).
std::uint64_t threshold_pstar(double alpha, double beta);

// Smallest a >= 1 with 2^(beta a l) >= (alpha 2^-beta (1 - lambda) + 2 lambda - 1)
// / (lambda (2 lambda - 1)), lambda = 2^-beta.
int threshold_astar(double alpha, double beta, int l);

// Exponent ladder a_0 = 0 <= a_1 <= ... <= a_s for one prime.
std::vector<int> exponents_for_prime(std::uint64_t p, int s, double alpha, double beta, int l);

struct PrimeLadder {
  std::uint64_t p;
  std::vector<int> exponents;  // size s + 1
};

struct AveragingScheme {
  double delta = 0.0;
  double c0 = 0.0;
  double alpha = 0.0;   // c0 |a_l|
  double beta = 0.0;    // 1/k
  double lambda = 0.0;  // 2^-beta
  double Lambda = 0.0;  // sum_{j<=s} lambda^j
  int s = 0;
  int l = 1;
  std::uint64_t m = 1;  // prime cutoff 2^s (desk schemes: largest prime used)
  std::uint64_t pstar = 2;
  int astar = 1;
  double c2 = 0.0, c3 = 0.0, c4 = 0.0, c1 = 0.0;
  bool desk = false;
  std::vector<PrimeLadder> ladders;  // sorted by prime; primes absent here have a_j = 0
  std::vector<double> log_moduli;    // natural log of d_j

  int exponent(std::uint64_t p, int j) const;
  double weight(int j) const;  // lambda^j / Lambda
  // d_j as a 64-bit integer, or nullopt when it does not fit.
  std::optional<std::uint64_t> modulus(int j) const;
  // (1/Lambda) sum_j lambda^j tau(d_j, q).
  double averaged_tau(std::uint64_t q) const;
};

struct SchemeOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;  // largest allowed 2^s
};

// Moduli d_0 = 1 | d_1 | ... | d_s with weights lambda^j such that the
// averaged tau is >= -delta for every q.
AveragingScheme build_scheme(double delta, const OddPolynomial& f, double c0,
                             const SchemeOptions& options = {});

struct SchemeVerdict {
  std::uint64_t worst_q = 1;
  double worst_value = 1.0;
  std::uint64_t q_max = 0;
  bool pass = false;
};

// Exhaustive check of the averaged bound for every 1 <= q <= q_max.
SchemeVerdict verify_scheme(const AveragingScheme& scheme, std::uint64_t q_max,
                            unsigned threads = 0);

// Prime p such that tau(d_j, q) >= tau(p^{a_j}, p^{v_p(q)}) for every j, found as
// in the reduction argument (smallest prime of q / gcd(q, d_{m}^l)).
struct ReductionCertificate {
  std::uint64_t p = 0;
  int k = 0;             // v_p(q)
  bool termwise = true;  // every j satisfies the inequality
  double full_sum = 0.0;       // averaged tau(d_j, q)
  double prime_sum = 0.0;      // same average with tau(p^{a_j}, p^k) at the certificate prime
  double min_prime_sum = 0.0;  // smallest such average over all primes dividing q
};
ReductionCertificate reduction_certificate(const AveragingScheme& scheme, std::uint64_t q);

struct LemmaSuiteReport {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  double worst_margin = 0.0;  // min (lhs - rhs) observed
};

// Inequality suites for the prime-power ladders, for all primes p <= p_max and
// 1 <= s <= s_max, with 1 <= k <= 8 l s:
//   large primes (p >= p*): sum mu^j tau*(p^j, p^k) >= -mu^{s+1}/(1-mu)
//   small primes (p < p*):  sum mu^j tau(p^{a* j}, p^k) >= -mu^{s+1}/(1-mu)
//   ladders (p <= 2^s):     sum lambda^j tau(p^{a_j}, p^k) >= -(1+alpha) lambda^{s+1}/(1-lambda)
//                           and p^{a_s} < 2^{c2 s}
// with mu = lambda = 2^-beta.
LemmaSuiteReport check_large_prime_lemma(double alpha, double beta, int l, std::uint64_t p_max,
                                         int s_max);
LemmaSuiteReport check_small_prime_lemma(double alpha, double beta, int l, std::uint64_t p_max,
                                         int s_max);
LemmaSuiteReport check_ladder_lemma(double alpha, double beta, int l, std::uint64_t p_max,
                                    int s_max);

// A desk-scale chain of moduli: greedily extends 1 | d_1 | ... by prime factors
// while every surrogate keeps at least min_terms terms at this n, choosing the
// factor that most improves the exact principal part
// min_{q <= principal_qmax, (a,q)=1} (1/Lambda) sum_j lambda^j S_{d_j}(af, q)/q.
struct DeskOptions {
  std::uint64_t principal_qmax = 200;
  std::uint64_t min_terms = 4;
  int max_levels = 8;
  double c0 = 1.0;     // only fills alpha and the c-constants of the record
  double delta = 0.3;  // recorded as the scheme's target level
};
AveragingScheme build_desk_scheme(const OddPolynomial& f, std::uint64_t n,
                                  const DeskOptions& options = {});

// The exact principal-part minimum for a list of moduli (see DeskOptions).
struct PrincipalMinimum {
  double value = 1.0;
  std::uint64_t q = 1;
  std::int64_t a = 0;
};
PrincipalMinimum principal_minimum(const OddPolynomial& f, const std::vector<std::uint64_t>& moduli,
                                   double lambda, std::uint64_t q_max);

}  // namespace vdc
