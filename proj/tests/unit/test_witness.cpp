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

#include <cmath>
#include <map>
#include <set>

#include "core/averaging.hpp"
#include "core/error.hpp"
#include "core/kernels.hpp"
#include "core/witness.hpp"
#include "oracle.hpp"

using namespace vdc;

namespace {

OddPolynomial cube() {
  const std::vector<std::int64_t> v{0, 0, 1};
  return OddPolynomial::make(std::span<const std::int64_t>(v));
}

// A hand-made chain 1 | d_1 | ... from one prime per level.
AveragingScheme chain_scheme(const std::vector<std::uint64_t>& factors) {
  AveragingScheme sc;
  sc.desk = true;
  sc.beta = 1.0 / 3;
  sc.l = 3;
  sc.lambda = std::pow(2.0, -sc.beta);
  sc.s = static_cast<int>(factors.size());
  sc.Lambda = 0;
  for (int j = 0; j <= sc.s; ++j) sc.Lambda += std::pow(sc.lambda, j);
  std::map<std::uint64_t, std::vector<int>> exps;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    auto& e = exps[factors[j]];
    e.resize(factors.size() + 1, 0);
  }
  for (auto& [p, e] : exps) {
    for (std::size_t j = 1; j <= factors.size(); ++j) e[j] = e[j - 1] + (factors[j - 1] == p ? 1 : 0);
    sc.ladders.push_back({p, e});
  }
  sc.log_moduli.assign(factors.size() + 1, 0.0);
  for (std::size_t j = 1; j <= factors.size(); ++j) {
    sc.log_moduli[j] = sc.log_moduli[j - 1] + std::log(static_cast<double>(factors[j - 1]));
  }
  return sc;
}

}  // namespace

TEST_SUITE("witness") {
  TEST_CASE("scanner finds known minima") {
    const SparseCosinePolynomial t(0.4, {{1, 0.6}}, Provenance::kOther);
    const auto r = scan_min(t, 1000);
    CHECK(r.refined_min == doctest::Approx(-0.2).epsilon(1e-12));
    CHECK(r.refined_argmin == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(r.refined_min <= r.grid_min);
    CHECK_FALSE(r.undersampled);

    const auto fe = scan_min(fejer(64), 100000);
    CHECK(fe.refined_min >= -1e-12);

    // An off-grid minimum is recovered by refinement.
    const SparseCosinePolynomial u(0.0, {{7, 1.0}, {11, 0.5}}, Provenance::kOther);
    const auto ur = scan_min(u, 64, 60, 2);
    CHECK(ur.undersampled == false);
    double brute = 1e9;
    for (int i = 0; i < 2000000; ++i) brute = std::min(brute, u.eval(i / 2000000.0));
    CHECK(ur.refined_min <= brute + 1e-9);
    CHECK(scan_min(u, 20).undersampled);
  }

  TEST_CASE("paper parameters in log space") {
    const auto pp = paper_parameters(0.5, cube());
    CHECK(pp.k == 3);
    CHECK(pp.c8 == doctest::Approx(4.0));
    CHECK(pp.dstar.log_value == doctest::Approx(std::log(4.0) + 8.0));
    CHECK(pp.n_exponent == 6561.0);
    CHECK(pp.n.log_value == doctest::Approx(6561.0 * (std::log(4.0) + 8.0)));
    CHECK(pp.R_exponent == doctest::Approx(4414.5));
    CHECK(pp.Q_exponent == doctest::Approx(1.5 * 729));
    CHECK(pp.q_below_r);
    const LogMagnitude lm{std::log(314.0)};
    CHECK(lm.exponent10() == 2);
    CHECK(lm.mantissa() == doctest::Approx(3.14));
  }

  TEST_CASE("witness invariants for the desk chain") {
    const auto f = cube();
    const std::uint64_t n = 1000000;
    const auto sc = build_desk_scheme(f, n);
    const auto w = build_witness(f, 0.3, sc, n);
    CHECK(w.T.b0() == 0.3);
    CHECK(w.report.b0 == 0.3);
    CHECK(std::abs(w.report.coeff_sum - 1.0) <= 1e-12);
    CHECK(w.report.coefficients_nonnegative);
    CHECK(w.report.spectrum_in_values);
    CHECK(w.report.max_frequency <= n);
    CHECK(w.T.eval(0.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_FALSE(w.report.caveat.empty());

    std::set<std::uint64_t> freqs;
    std::uint64_t raw = 0;
    for (std::uint64_t d : w.report.moduli) {
      for (std::uint64_t j = 1; BigInt(d * j) * (d * j) * (d * j) <= n; ++j) {
        freqs.insert(d * d * d * j * j * j);
        ++raw;
      }
    }
    std::uint64_t level_sum = 0;
    for (auto t : w.report.level_terms) level_sum += t;
    // Top-index weights vanish when (d j)^3 = n exactly, so allow that slack.
    CHECK(level_sum <= raw);
    CHECK(w.report.term_count <= freqs.size());
    for (const auto& t : w.T.terms()) CHECK(freqs.count(t.freq) == 1);
  }

  TEST_CASE("single level witness is an affine surrogate") {
    const auto f = cube();
    const auto sc = chain_scheme({});
    const auto w = build_witness(f, 0.25, sc, 100000);
    const auto g = build_surrogate(f, 100000, 1);
    REQUIRE(w.T.size() == g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
      CHECK(w.T.terms()[i].freq == g.terms()[i].freq);
      CHECK(w.T.terms()[i].coeff == doctest::Approx(0.75 * g.terms()[i].coeff).epsilon(1e-15));
    }
    CHECK(w.T.eval(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("shared frequencies are merged") {
    const auto f = cube();
    const std::uint64_t n = 1000;
    const auto sc = chain_scheme({2});
    const auto w = build_witness(f, 0.5, sc, n);
    const auto g1 = build_surrogate(f, n, 1);
    const auto g2 = build_surrogate(f, n, 2);
    const double lam = sc.lambda;
    const double expect = 0.5 * (g1.coeff_at(8) + lam * g2.coeff_at(8)) / (1 + lam);
    CHECK(w.T.coeff_at(8) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(g1.coeff_at(8) > 0);
    CHECK(g2.coeff_at(8) > 0);
    std::set<std::uint64_t> seen;
    for (const auto& t : w.T.terms()) CHECK(seen.insert(t.freq).second);
  }

  TEST_CASE("empty surrogate names the modulus") {
    const auto sc = chain_scheme({7});
    try {
      build_witness(cube(), 0.5, sc, 100);
      FAIL("expected failure");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kEmptyRange);
      CHECK(std::string(e.what()).find("d_1 = 7") != std::string::npos);
    }
  }

  TEST_CASE("spectrum containment") {
    const auto f = cube();
    CHECK(spectrum_in_values(f, SparseCosinePolynomial(1.0, {{1, 0.0}, {27, 0.0}}, Provenance::kOther)));
    CHECK_FALSE(spectrum_in_values(f, SparseCosinePolynomial(1.0, {{2, 0.0}}, Provenance::kOther)));
  }

  TEST_CASE("smallest passing delta is a threshold") {
    const auto f = cube();
    const std::uint64_t n = 10000;
    const auto sc = chain_scheme({});
    const std::uint64_t grid = 8 * n;
    const auto ds = min_passing_delta(f, sc, n, grid, 1e-3);
    CHECK(ds.confirmed);
    CHECK(ds.scan_min >= -1e-3);
    CHECK(ds.delta > 0.1);
    CHECK(ds.delta < 0.9);
    const auto below = build_witness(f, ds.delta - 0.01, sc, n);
    CHECK(scan_min(below.T, grid).refined_min < -1e-3);
    CHECK(ds.scale == doctest::Approx(ds.delta * std::cbrt(std::log(static_cast<double>(ds.max_frequency)))));
  }
}
