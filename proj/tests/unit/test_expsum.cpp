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

#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "core/error.hpp"
#include "core/expsum.hpp"
#include "oracle.hpp"

using namespace vdc;

namespace {

OddPolynomial poly(std::initializer_list<std::int64_t> c) {
  const std::vector<std::int64_t> v(c);
  return OddPolynomial::make(std::span<const std::int64_t>(v));
}

}  // namespace

TEST_SUITE("expsum") {
  TEST_CASE("complete sums of the cube") {
    const auto cube = poly({0, 0, 1});
    CHECK(complete_sum(cube, 1, 1).value == 1.0);
    CHECK(complete_sum(cube, 1, 9).value ==
          doctest::Approx(3 * (1 + 2 * std::cos(2 * std::numbers::pi / 9))).epsilon(1e-14));
    CHECK(complete_sum(cube, 1, 9).value == doctest::Approx(7.5963).epsilon(1e-4));
    CHECK(std::abs(complete_sum(cube, 1, 5).value) < 1e-12);
    CHECK(complete_sum(cube, 1, 2).value == 0.0);
  }

  TEST_CASE("reduced sums of the cube") {
    const auto cube = poly({0, 0, 1});
    CHECK(reduced_sum(cube, 2, 1, 8).value == 8.0);
    CHECK(reduced_sum(cube, 1, 1, 9).value == complete_sum(cube, 1, 9).value);
    const auto o = oracle::direct_sum(cube, 3, 2, 5);
    CHECK(reduced_sum(cube, 3, 2, 5).value == doctest::Approx(static_cast<double>(o.re)).epsilon(1e-13));
    CHECK(complete_sum(poly({0, 0, 54}), 1, 5).value == doctest::Approx(reduced_sum(cube, 3, 2, 5).value));
  }

  TEST_CASE("reduced sums agree with direct summation") {
    std::mt19937_64 rng(17);
    const std::array<OddPolynomial, 3> fs{poly({0, 0, 1}), poly({0, 0, 0, 0, 1}), poly({2, 0, 3})};
    for (int it = 0; it < 1500; ++it) {
      const auto& f = fs[it % 3];
      const std::uint64_t q = rng() % 400 + 1, d = rng() % 30 + 1;
      const std::int64_t a = static_cast<std::int64_t>(rng() % 2001) - 1000;
      const auto got = reduced_sum(f, d, a, q);
      const auto o = oracle::direct_sum(f, d, a, q);
      CHECK(std::abs(got.value - static_cast<double>(o.re)) < 1e-9);
      CHECK(std::abs(o.im) < 1e-9);
      CHECK(std::abs(got.residual_imag) < 1e-9);
      CHECK(std::abs(reference_imag(f, d, a, q)) < 1e-9);
    }
  }

  TEST_CASE("batched reduced sums match single evaluations exactly") {
    const auto f = poly({2, 0, 3});
    for (std::uint64_t q : {1ULL, 2ULL, 12ULL, 97ULL, 360ULL}) {
      for (std::uint64_t d : {1ULL, 4ULL, 15ULL}) {
        const auto rows = reduced_sums_all(f, d, q);
        REQUIRE(rows.size() == q);
        for (std::uint64_t a = 0; a < q; ++a) {
          const auto one = reduced_sum(f, d, static_cast<std::int64_t>(a), q);
          CHECK(rows[a].value == one.value);
          CHECK(rows[a].residual_imag == one.residual_imag);
          CHECK(rows[a].reference_imag == reference_imag(f, d, static_cast<std::int64_t>(a), q));
        }
      }
    }
  }

  TEST_CASE("multiplier sums agree with the direct oracle") {
    const auto f = poly({0, 0, 1});
    for (std::uint64_t q : {1ULL, 7ULL, 64ULL, 81ULL, 210ULL}) {
      const auto sums = multiplier_sums(f, 2, q);
      for (std::uint64_t a = 0; a < q; ++a) {
        const auto o = oracle::direct_sum(f, 2, static_cast<std::int64_t>(a), q);
        CHECK(std::abs(sums[a] - static_cast<double>(o.re)) < 1e-9);
      }
    }
  }

  TEST_CASE("c0 sweep") {
    const auto cube = poly({0, 0, 1});
    const auto tiny = estimate_c0(cube, 2);
    REQUIRE(tiny.rows.size() == 1);
    CHECK(tiny.rows[0].max_ratio == 0.0);
    CHECK(tiny.c0 == 0.0);

    const auto est = estimate_c0(cube, 300, 2);
    double running = 0.0;
    for (const auto& row : est.rows) {
      CHECK(row.running_c0 >= running);
      running = row.running_c0;
      if (oracle::is_prime_slow(row.q) && row.q % 3 == 2) CHECK(row.max_ratio < 1e-9);
    }
    CHECK(est.c0 == running);
    CHECK(est.c0 > 1.0);
    CHECK(est.c0 < 4.0);
    CHECK(std::gcd(static_cast<std::uint64_t>(est.argmax_a), est.argmax_q) == 1);
    const auto o = oracle::direct_sum(cube, 1, est.argmax_a, est.argmax_q);
    const double ratio = std::abs(static_cast<double>(o.re)) / std::cbrt(std::pow(est.argmax_q, 2.0));
    CHECK(ratio == doctest::Approx(est.c0).epsilon(1e-9));
    CHECK(estimate_c0(cube, 300, 1).c0 == est.c0);
    CHECK_THROWS_AS(estimate_c0(cube, 1), Error);
  }
}
