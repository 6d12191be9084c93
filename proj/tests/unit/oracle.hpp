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

// Independent reference computations shared by the unit tests. They use the
// most direct formulation available (big integers, long double trigonometry,
// exhaustive enumeration) and none of the library's reduction tricks.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "core/numeric.hpp"
#include "core/poly.hpp"

namespace vdc::oracle {

// Direct sum over s of e(a f(d s) / q) with f evaluated exactly.
struct Complex {
  long double re = 0, im = 0;
};

inline Complex direct_sum(const OddPolynomial& f, std::uint64_t d, std::int64_t a, std::uint64_t q) {
  Complex out;
  const BigInt Q = q;
  for (std::uint64_t s = 0; s < q; ++s) {
    BigInt v = f(BigInt(d) * s) * a;
    v %= Q;
    if (v < 0) v += Q;
    const long double angle = 2.0L * std::numbers::pi_v<long double> *
                              static_cast<long double>(static_cast<std::uint64_t>(v)) /
                              static_cast<long double>(q);
    out.re += std::cos(angle);
    out.im += std::sin(angle);
  }
  return out;
}

inline BigInt big_gcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline BigInt big_pow(const BigInt& b, unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// tau from its definition with d^l formed explicitly.
inline double tau_direct(std::uint64_t d, std::uint64_t q, double alpha, double beta, int l) {
  const BigInt dl = big_pow(BigInt(d), static_cast<unsigned>(l));
  const BigInt g = big_gcd(BigInt(q), dl);
  const auto r = static_cast<std::uint64_t>(BigInt(q) / g);
  if (r == 1) return 1.0;
  return std::max(-alpha * std::pow(static_cast<double>(r), -beta), -1.0);
}

inline bool is_prime_slow(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

}  // namespace vdc::oracle
