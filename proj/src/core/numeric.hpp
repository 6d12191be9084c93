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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace vdc {

using BigInt = boost::multiprecision::cpp_int;
using u128 = unsigned __int128;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a modulo m via extended Euclid; a must be a unit mod m.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

// gcd(q, d^l) without forming d^l.
std::uint64_t gcd_with_power(std::uint64_t q, std::uint64_t d, int l);

// Reduces a (possibly negative) big integer into [0, m).
std::uint64_t reduce_mod(const BigInt& x, std::uint64_t m);

// Exact a/b for big integers of any size, rounded to the nearest double.
double ratio_to_double(const BigInt& num, const BigInt& den);

bool is_prime(std::uint64_t n);

// Primes in [2, limit] by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// spf[n] = smallest prime factor of n for 2 <= n <= limit (spf[0] = spf[1] = 0).
std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit);

struct PrimePower {
  std::uint64_t p;
  int e;
};

// Factorization by trial division (fine for the moduli handled here).
std::vector<PrimePower> factorize(std::uint64_t n);

// cos(2*pi*r/q) and sin(2*pi*r/q) with r reduced in exact integer arithmetic to
// the symmetric range (-q/2, q/2] before the floating point call. phase_sin of a
// negated residue is the exact negation; the half and quarter turns are exact.
double phase_cos(std::uint64_t r, std::uint64_t q);
double phase_sin(std::uint64_t r, std::uint64_t q);

// cos(2*pi*t) for a real phase t; t is reduced mod 1 first.
double turn_cos(double t);

// Fractional part of freq * x in [0, 1), computed with error-free products so
// that the phase is accurate to a few ulps of 1 even when freq * x ~ 1e18.
double frac_product(std::uint64_t freq, double x);

// Number of worker threads: explicit value if nonzero, else VDC_THREADS, else
// the hardware concurrency.
unsigned resolve_threads(unsigned requested);

// Runs body(block) for block in [0, blocks) on up to `threads` workers. Blocks
// are handed out statically so results never depend on the thread count as
// long as each block writes only its own output.
void parallel_blocks(std::size_t blocks, unsigned threads,
                     const std::function<void(std::size_t)>& body);

}  // namespace vdc
