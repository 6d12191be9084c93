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

#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "core/error.hpp"
#include "core/numeric.hpp"
#include "oracle.hpp"

using namespace vdc;

TEST_SUITE("numeric") {
  TEST_CASE("modular helpers agree with big integer arithmetic") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
      const std::uint64_t m = rng() % 1000000007ULL + 2;
      const std::uint64_t b = rng(), e = rng() % 200;
      BigInt expect = 1;
      for (std::uint64_t k = 0; k < e; ++k) expect = expect * (b % m) % m;
      CHECK(pow_mod(b, e, m) == static_cast<std::uint64_t>(expect));
    }
    for (std::uint64_t a = 1; a < 97; ++a) CHECK(mul_mod(a, inverse_mod(a, 97), 97) == 1);
    CHECK_THROWS_AS(inverse_mod(6, 9), Error);
  }

  TEST_CASE("gcd with a power never forms the power") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3000; ++i) {
      const std::uint64_t q = rng() % 100000 + 1, d = rng() % 5000 + 1;
      const int l = static_cast<int>(rng() % 5) + 1;
      const BigInt g = oracle::big_gcd(BigInt(q), oracle::big_pow(BigInt(d), static_cast<unsigned>(l)));
      CHECK(gcd_with_power(q, d, l) == static_cast<std::uint64_t>(g));
    }
  }

  TEST_CASE("reduce_mod handles negative values") {
    CHECK(reduce_mod(BigInt(-7), 5) == 3);
    CHECK(reduce_mod(BigInt(7), 5) == 2);
    CHECK(reduce_mod(BigInt(-10), 5) == 0);
  }

  TEST_CASE("ratio_to_double is correctly rounded on representative inputs") {
    CHECK(ratio_to_double(1, 3) == doctest::Approx(1.0 / 3).epsilon(1e-16));
    CHECK(ratio_to_double(-22, 7) == doctest::Approx(-22.0 / 7).epsilon(1e-16));
    const BigInt big = oracle::big_pow(10, 400);
    CHECK(ratio_to_double(big + 1, big) == 1.0);
    CHECK(ratio_to_double(big, big * 4) == 0.25);
    CHECK(ratio_to_double(0, 5) == 0.0);
  }

  TEST_CASE("primality and sieves agree with trial division") {
    for (std::uint64_t n = 0; n < 20000; ++n) CHECK(is_prime(n) == oracle::is_prime_slow(n));
    CHECK(is_prime(18446744073709551557ULL));
    CHECK_FALSE(is_prime(18446744073709551555ULL));
    CHECK_FALSE(is_prime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(primes_up_to(1000000).size() == 78498);
    const auto spf = smallest_prime_factors(5000);
    for (std::uint32_t n = 2; n <= 5000; ++n) {
      CHECK(n % spf[n] == 0);
      CHECK(oracle::is_prime_slow(spf[n]));
      for (std::uint32_t p = 2; p < spf[n]; ++p) CHECK(n % p != 0);
    }
  }

  TEST_CASE("factorize reproduces its input") {
    for (std::uint64_t n = 1; n < 5000; ++n) {
      std::uint64_t prod = 1;
      for (const auto& [p, e] : factorize(n)) {
        CHECK(oracle::is_prime_slow(p));
        for (int i = 0; i < e; ++i) prod *= p;
      }
      CHECK(prod == n);
    }
    const auto f = factorize(600851475143ULL);
    REQUIRE(f.size() == 4);
    CHECK(f.back().p == 6857);
  }

  TEST_CASE("phases are exact at special angles and odd in the residue") {
    CHECK(phase_cos(0, 7) == 1.0);
    CHECK(phase_cos(4, 8) == -1.0);
    CHECK(phase_cos(2, 8) == 0.0);
    CHECK(phase_sin(2, 8) == 1.0);
    CHECK(phase_sin(6, 8) == -1.0);
    for (std::uint64_t q = 1; q < 300; ++q) {
      for (std::uint64_t r = 1; r < q; ++r) {
        CHECK(phase_sin(q - r, q) == -phase_sin(r, q));
        CHECK(phase_cos(q - r, q) == phase_cos(r, q));
        CHECK(phase_cos(r, q) == doctest::Approx(std::cos(2 * std::numbers::pi * r / q)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("frac_product keeps phase accuracy for huge frequencies") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
      const std::uint64_t freq = rng() >> 4;
      const std::uint64_t num = rng() >> 11;  // x = num / 2^53 exactly
      const double x = std::ldexp(static_cast<double>(num), -53);
      const BigInt prod = BigInt(freq) * num;
      const BigInt frac_num = prod % (BigInt(1) << 53);
      const double expect = std::ldexp(static_cast<double>(frac_num), -53);
      double got = frac_product(freq, x);
      double diff = std::abs(got - expect);
      diff = std::min(diff, 1.0 - diff);
      CHECK(diff < 1e-15);
    }
  }

  TEST_CASE("parallel blocks cover every block once and rethrow failures") {
    for (unsigned threads : {1u, 2u, 5u}) {
      std::vector<std::atomic<int>> hits(37);
      parallel_blocks(hits.size(), threads, [&](std::size_t b) { hits[b]++; });
      for (auto& h : hits) CHECK(h.load() == 1);
      CHECK_THROWS_AS(parallel_blocks(10, threads,
                                      [](std::size_t b) {
                                        if (b == 7) throw std::runtime_error("boom");
                                      }),
                      std::runtime_error);
    }
  }

  TEST_CASE("thread count falls back to the environment") {
    CHECK(resolve_threads(3) == 3);
    setenv("VDC_THREADS", "2", 1);
    CHECK(resolve_threads(0) == 2);
    unsetenv("VDC_THREADS");
    CHECK(resolve_threads(0) >= 1);
  }
}
