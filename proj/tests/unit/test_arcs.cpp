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

#include <numeric>
#include <optional>
#include <utility>

#include "core/arcs.hpp"
#include "core/error.hpp"

using namespace vdc;

namespace {

// Smallest denominator r <= Q admitting b with |x - b/r| <= 1/(rR).
std::optional<std::pair<std::int64_t, std::uint64_t>> brute(const Rational& x, std::uint64_t Q,
                                                            const Rational& R) {
  for (std::uint64_t r = 1; r <= Q; ++r) {
    std::optional<std::int64_t> best;
    Rational best_err;
    for (std::uint64_t b = 0; b <= r; ++b) {
      if (std::gcd(b, r) != 1) continue;
      Rational err = x - Rational(b, r);
      if (err < 0) err = -err;
      if (err * r * R <= 1 && (!best || err < best_err)) {
        best = static_cast<std::int64_t>(b);
        best_err = err;
      }
    }
    if (best) return std::pair{*best, r};
  }
  return std::nullopt;
}

}  // namespace

TEST_SUITE("arcs") {
  TEST_CASE("worked examples") {
    const auto half = classify(0.5, 2, 10.0);
    CHECK(half.kind == ArcKind::kMajor);
    CHECK(half.a == 1);
    CHECK(half.q == 2);
    CHECK(half.kappa == 0.0);

    CHECK(classify(0.6180339887, 5, 1e6).kind == ArcKind::kMinor);

    const Rational x = Rational(1, 7) + Rational(1, 1000000000);
    const auto near = classify(x, 10, Rational(1000000));
    CHECK(near.kind == ArcKind::kMajor);
    CHECK(near.a == 1);
    CHECK(near.q == 7);
    CHECK(near.kappa == doctest::Approx(1e-9).epsilon(1e-12));
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(classify(1.0, 2, 10.0), Error);
    CHECK_THROWS_AS(classify(-0.1, 2, 10.0), Error);
    CHECK_THROWS_AS(classify(0.3, 10, 10.0), Error);
    CHECK_THROWS_AS(classify(0.3, 0, 10.0), Error);
  }

  TEST_CASE("exact conversion of doubles") {
    CHECK(exact_rational(0.5) == Rational(1, 2));
    CHECK(exact_rational(0.1) != Rational(1, 10));
    CHECK(exact_rational(3.0) == Rational(3));
    CHECK(exact_rational(0.0) == Rational(0));
  }

  TEST_CASE("rationals with small denominator are recovered exactly") {
    for (std::uint64_t q = 1; q <= 60; ++q) {
      for (std::uint64_t a = 0; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const auto loc = classify(Rational(a, q), 60, Rational(1000));
        CHECK(loc.kind == ArcKind::kMajor);
        CHECK(loc.q == q);
        CHECK(loc.a == static_cast<std::int64_t>(a));
        CHECK(loc.kappa == 0.0);
      }
    }
  }

  TEST_CASE("agreement with exhaustive search") {
    const std::pair<std::uint64_t, Rational> cutoffs[] = {
        {1, Rational(3, 2)}, {3, Rational(4)}, {5, Rational(50)}, {12, Rational(13)}, {20, Rational(1000)}};
    for (std::uint64_t qq = 1; qq <= 200; ++qq) {
      for (std::uint64_t aa = 0; aa < qq; ++aa) {
        if (std::gcd(aa, qq) != 1) continue;
        const Rational x(aa, qq);
        for (const auto& [Q, R] : cutoffs) {
          const auto loc = classify(x, Q, R);
          const auto expect = brute(x, Q, R);
          INFO("x = " << aa << "/" << qq << " Q = " << Q);
          REQUIRE(static_cast<bool>(expect) == (loc.kind == ArcKind::kMajor));
          if (expect) {
            CHECK(loc.q == expect->second);
            CHECK(loc.a == expect->first);
            const Rational kappa = x - Rational(expect->first, expect->second);
            CHECK(loc.kappa == doctest::Approx(static_cast<double>(kappa)).epsilon(1e-15));
          }
        }
      }
    }
  }
}
