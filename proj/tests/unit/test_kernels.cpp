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
#include <cmath>
#include <numbers>
#include <random>

#include "core/error.hpp"
#include "core/expsum.hpp"
#include "core/kernels.hpp"
#include "oracle.hpp"

using namespace vdc;

namespace {

OddPolynomial poly(std::initializer_list<std::int64_t> c) {
  const std::vector<std::int64_t> v(c);
  return OddPolynomial::make(std::span<const std::int64_t>(v));
}

// Plain long double evaluation with no phase reduction tricks beyond exact
// integer reduction of freq * a mod q.
long double direct_eval(const SparseCosinePolynomial& p, std::uint64_t a, std::uint64_t q) {
  long double v = p.b0();
  for (const auto& t : p.terms()) {
    const auto r = static_cast<std::uint64_t>(BigInt(t.freq) * a % q);
    v += t.coeff * std::cos(2.0L * std::numbers::pi_v<long double> * r / q);
  }
  return v;
}

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("Fejer kernel") {
    const auto f1 = fejer(1);
    CHECK(f1.b0() == 1.0);
    CHECK(f1.size() == 0);
    const auto f2 = fejer(2);
    CHECK(f2.eval(0.5) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(std::abs(f2.eval_rational(1, 2)) < 1e-15);
    for (std::uint64_t n : {1ULL, 5ULL, 64ULL, 1000ULL}) {
      const auto f = fejer(n);
      CHECK(f.eval(0.0) == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(f.coefficient_sum() == doctest::Approx(1.0).epsilon(1e-13));
      for (double x : {0.1234, 0.5, 0.77}) {
        CHECK(f.eval(x) == doctest::Approx(fejer_value(n, x)).epsilon(1e-9).scale(1.0));
        CHECK(f.eval(x) == doctest::Approx(f.eval(x + 1.0)).epsilon(1e-12).scale(1.0));
      }
    }
    const auto f64 = fejer(64);
    std::vector<double> grid(100000);
    f64.eval_grid(grid.size(), 0, grid);
    CHECK(*std::min_element(grid.begin(), grid.end()) >= -1e-12);
    CHECK_THROWS_AS(fejer(0), Error);
  }

  TEST_CASE("surrogate normalisation") {
    const auto cube = poly({0, 0, 1});
    CHECK(surrogate_norm(cube, 1000, 1) == doctest::Approx(0.98505).epsilon(1e-12));
    CHECK(surrogate_norm(cube, 8, 1) == doctest::Approx(21.0 / 32).epsilon(1e-14));
    CHECK_THROWS_AS(surrogate_norm(cube, 7, 2), Error);
    try {
      build_surrogate(cube, 7, 2);
      FAIL("expected an empty range error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyRange);
    }

    const auto g8 = build_surrogate(cube, 8, 1);
    REQUIRE(g8.size() == 1);
    CHECK(g8.terms()[0].freq == 1);
    CHECK(g8.terms()[0].coeff == doctest::Approx(1.0).epsilon(1e-15));

    const auto g = build_surrogate(cube, 1000, 1);
    CHECK(g.b0() == 0.0);
    CHECK(g.coeff_at(1) == doctest::Approx(2.0 / 0.98505 * 3 * (1e-3 - 1e-6)).epsilon(1e-12));
    CHECK(g.coeff_at(1) == doctest::Approx(0.006085).epsilon(1e-3));
    CHECK(g.max_frequency() == 729);  // the j = 10 weight vanishes
    CHECK(g.meta() == Provenance::kSurrogate);
  }

  TEST_CASE("surrogate weights follow the defining formula") {
    const auto f = poly({-2, 0, 0, 0, 3});
    const std::uint64_t n = 5000000, d = 3;
    const auto terms = surrogate_terms(f, n, d);
    long double total = 0;
    for (const auto& t : terms) {
      const long double dj = static_cast<long double>(d * t.j);
      const long double lead = 3 * std::pow(dj, 5.0L);
      const long double w = 2.0L * 3 * 5 * std::pow(static_cast<long double>(d), 5.0L) *
                            std::pow(static_cast<long double>(t.j), 4.0L) * (1.0L / n - lead / n / n);
      CHECK(t.weight == doctest::Approx(static_cast<double>(w)).epsilon(1e-12));
      CHECK(lead <= n);
      CHECK(t.freq == static_cast<std::uint64_t>(f(BigInt(d * t.j))));
      total += w;
    }
    CHECK(surrogate_norm(f, n, d) == doctest::Approx(static_cast<double>(total)).epsilon(1e-12));
    const auto g = build_surrogate(f, n, d);
    CHECK(g.eval(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    for (const auto& t : g.terms()) CHECK(t.coeff > 0.0);
  }

  TEST_CASE("evaluation paths agree") {
    const auto g = build_surrogate(poly({0, 0, 1}), 1000000, 2);
    for (std::uint64_t q : {7ULL, 64ULL, 1000ULL, 999983ULL}) {
      for (std::uint64_t a : {std::uint64_t{1}, std::uint64_t{3}, q - 1}) {
        const double exact = static_cast<double>(direct_eval(g, a, q));
        CHECK(g.eval_rational(static_cast<std::int64_t>(a), q) == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
        CHECK(g.eval_near_rational(static_cast<std::int64_t>(a), q, 0.0) ==
              doctest::Approx(exact).epsilon(1e-12).scale(1.0));
      }
    }
    CHECK(g.eval_near_rational(1, 7, 1e-7) ==
          doctest::Approx(g.eval(1.0 / 7 + 1e-7)).epsilon(1e-9).scale(1.0));

    const std::uint64_t points = 5000;
    std::vector<double> full(points), part(1000);
    g.eval_grid(points, 0, full);
    g.eval_grid(points, 1234, part);
    for (std::size_t i = 0; i < part.size(); ++i) CHECK(part[i] == full[1234 + i]);
    for (std::uint64_t i = 0; i < points; i += 97) {
      CHECK(full[i] == doctest::Approx(static_cast<double>(direct_eval(g, i, points))).epsilon(1e-11).scale(1.0));
    }
  }

  TEST_CASE("accumulator merges equal frequencies") {
    CosineAccumulator acc;
    acc.add(SparseCosinePolynomial(0.0, {{1, 0.5}, {8, 0.5}}, Provenance::kSurrogate), 0.5);
    acc.add(SparseCosinePolynomial(0.0, {{8, 1.0}}, Provenance::kSurrogate), 0.25);
    acc.add_constant(0.25);
    const auto t = acc.finish(Provenance::kWitness);
    REQUIRE(t.size() == 2);
    CHECK(t.coeff_at(8) == doctest::Approx(0.5));
    CHECK(t.coeff_at(1) == doctest::Approx(0.25));
    CHECK(t.b0() == 0.25);
    CHECK(t.coefficient_sum() == doctest::Approx(1.0));
    CHECK_THROWS_AS(SparseCosinePolynomial(0.0, {{2, 1.0}, {2, 1.0}}, Provenance::kOther), Error);
    CHECK_THROWS_AS(SparseCosinePolynomial(0.0, {{0, 1.0}}, Provenance::kOther), Error);
  }

  TEST_CASE("major arc residual") {
    const auto cube = poly({0, 0, 1});
    CHECK(std::abs(major_arc_residual(cube, 1000, 1, 0, 1, 0.0)) < 1e-12);
    // The residual oscillates with n, so only its O(q n^(-1/3)) envelope is checked.
    for (std::uint64_t n : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
      const double r = std::abs(major_arc_residual(cube, n, 1, 1, 9, 0.0));
      CHECK(r * std::cbrt(static_cast<double>(n)) / 9.0 < 0.05);
    }
    const auto g = build_surrogate(cube, 1000000, 2);
    CHECK(major_arc_residual(cube, 1000000, 2, 1, 8, 0.0) ==
          doctest::Approx(g.eval_rational(1, 8) - 1.0).epsilon(1e-12).scale(1.0));
    CHECK(std::abs(major_arc_residual(cube, 1000000, 2, 1, 8, 0.0)) < 0.05);
    CHECK_THROWS_AS(major_arc_residual(cube, 1000, 1, 3, 9, 0.0), Error);
  }
}
