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

#include "core/poly.hpp"

namespace vdc {

struct CompleteSumResult {
  double value = 0.0;          // real part of the sum
  double residual_imag = 0.0;  // imaginary part left by the accumulation
  std::uint64_t q = 1;
  std::int64_t a = 0;
  std::uint64_t d = 1;
};

// S(af, q) = sum_{s<q} e(a f(s) / q). Terms s and q - s are accumulated as a
// pair so that for odd f the imaginary parts cancel exactly.
CompleteSumResult complete_sum(const OddPolynomial& f, std::int64_t a, std::uint64_t q);

// S_d(af, q) = sum_{s<q} e(a f(d s) / q).
CompleteSumResult reduced_sum(const OddPolynomial& f, std::uint64_t d, std::int64_t a,
                              std::uint64_t q);

// Imaginary part of S_d(af, q) accumulated naively in index order with angles
// in [0, 2pi); a reference for the symmetric accumulation.
double reference_imag(const OddPolynomial& f, std::uint64_t d, std::int64_t a, std::uint64_t q);

struct SumRow {
  double value = 0.0;
  double residual_imag = 0.0;
  double reference_imag = 0.0;
};

// reduced_sum and reference_imag for every a in [0, q) at once. Each row is
// bitwise identical to the single-multiplier calls.
std::vector<SumRow> reduced_sums_all(const OddPolynomial& f, std::uint64_t d, std::uint64_t q);

// Real parts of S_d(af, q) for every a in [0, q), via the value histogram of
// f(d s) mod q. Much faster than q separate calls when all multipliers are needed.
std::vector<double> multiplier_sums(const OddPolynomial& f, std::uint64_t d, std::uint64_t q);

struct C0SweepRow {
  std::uint64_t q = 0;
  double max_ratio = 0.0;  // max over a coprime to q
  std::int64_t argmax_a = 0;
  double running_c0 = 0.0;
};

struct C0Estimate {
  double c0 = 0.0;
  std::uint64_t argmax_q = 0;
  std::int64_t argmax_a = 0;
  std::uint64_t q_max = 0;
  std::vector<C0SweepRow> rows;  // one per q in [2, q_max]
};

// Largest |S(af,q)| / (gcd(c(af), q)^(1/k) q^(1-1/k)) over 2 <= q <= q_max and
// a coprime to q: the working value of the implicit constant in the
// complete-sum bound for this polynomial.
C0Estimate estimate_c0(const OddPolynomial& f, std::uint64_t q_max, unsigned threads = 0);

}  // namespace vdc
