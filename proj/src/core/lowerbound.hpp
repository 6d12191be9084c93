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
#include <vector>

#include "core/kernels.hpp"
#include "core/poly.hpp"

namespace vdc {

// The k cosets of the subgroup of k-th powers in (Z/p)^*, ordered by their
// smallest element, with A_m = sum over the class of cos(2 pi a / p).
struct ResidueClassSystem {
  std::uint64_t p = 0;
  int k = 0;
  std::uint64_t beta = 1;
  std::uint64_t s = 0;  // (p - 1) / k
  std::vector<std::vector<std::uint64_t>> classes;
  std::vector<double> sums;
  std::size_t negative_index = 0;  // argmin of the sums
  double lemma_bound = 0.0;        // -sqrt(s / (k - 2))
  bool lemma_holds = true;         // smallest sum <= lemma_bound + 1e-9
};

// kEnforce turns a violated lemma bound into a kVerification error; kReport
// only records it in lemma_holds.
enum class LemmaCheck { kEnforce, kReport };

// Requires p prime, p = 1 mod k, k odd >= 3 and 1 <= beta < p.
ResidueClassSystem build_classes(std::uint64_t p, int k, std::uint64_t beta = 1,
                                 LemmaCheck check = LemmaCheck::kEnforce);

// Class sums with every residue scaled by beta: sum over Q_m of cos(2 pi beta a / p).
std::vector<double> scaled_class_sums(const ResidueClassSystem& sys, std::uint64_t beta);

// beta^-1 Q_neg mod p: the points a_i / p at which the proof samples T.
std::vector<std::uint64_t> sample_points(const ResidueClassSystem& sys);

// p = 1 mod k, p > beta and 1 + sqrt(s (k - 2)) <= sqrt(p).
bool prime_is_usable(std::uint64_t p, int k, std::uint64_t beta = 1);

struct PrimeInequality {
  std::uint64_t p = 0;
  double lhs = 0.0;        // a_0 + sum of coefficients at f(j) with p | j
  double rhs = 0.0;        // 1 / sqrt(p)
  double u_bound = 0.0;    // 1 / (1 + sqrt(s (k - 2)))
  double sample_sum = 0.0; // sum of T at the sample points, >= 0 for nonnegative T
  double class_min = 0.0;  // smallest class sum A
  double class_bound = 0.0;  // -A / (s - A), implied by sample_sum >= 0 for any A
  bool lemma_holds = true;   // A <= -sqrt(s / (k - 2)) + 1e-9
  bool pass = false;       // lhs >= rhs - 1e-9
  bool u_pass = false;     // lhs >= u_bound - 1e-9
  bool class_pass = false; // lhs >= class_bound - 1e-9
};

// f must be a monomial beta x^k.
PrimeInequality prime_inequality_check(const SparseCosinePolynomial& T, const OddPolynomial& f,
                                       std::uint64_t p);

struct LowerBound {
  double bound = 0.0;
  std::uint64_t best_m = 0;  // prime at which the maximum is attained (0 if clipped)
  std::uint64_t primes_used = 0;
  int totient_k = 0;
};

// max over m <= m_cap of (R(m) - log n) / theta(m), clipped at 0, with
// theta(m) = sum log p and R(m) = sum log p / sqrt(p) over usable p = 1 mod k.
LowerBound gamma_lower_bound(std::uint64_t n, int k, std::uint64_t m_cap, std::uint64_t beta = 1);

}  // namespace vdc
