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

#include "core/lowerbound.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace vdc {

namespace {

constexpr double kTol = 1e-9;

double class_sum(const std::vector<std::uint64_t>& cls, std::uint64_t scale, std::uint64_t p) {
  // Classes are closed under negation; pair a with p - a.
  double total = 0.0;
  for (std::uint64_t a : cls) {
    if (2 * a < p) total += 2.0 * phase_cos(mul_mod(a, scale, p), p);
  }
  return total;
}

void check_params(std::uint64_t p, int k, std::uint64_t beta) {
  require(k >= 3 && k % 2 == 1, ErrorCode::kInvalidArgument, "k must be odd and at least 3");
  require(is_prime(p), ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  require(p % static_cast<std::uint64_t>(k) == 1, ErrorCode::kInvalidArgument,
          "p must be 1 mod k");
  require(beta >= 1 && beta < p, ErrorCode::kInvalidArgument, "beta must satisfy 1 <= beta < p");
}

}  // namespace

ResidueClassSystem build_classes(std::uint64_t p, int k, std::uint64_t beta, LemmaCheck check) {
  check_params(p, k, beta);
  ResidueClassSystem sys;
  sys.p = p;
  sys.k = k;
  sys.beta = beta;
  sys.s = (p - 1) / static_cast<std::uint64_t>(k);

  std::vector<std::uint64_t> powers;
  for (std::uint64_t j = 1; j < p; ++j) powers.push_back(pow_mod(j, static_cast<std::uint64_t>(k), p));
  std::sort(powers.begin(), powers.end());
  powers.erase(std::unique(powers.begin(), powers.end()), powers.end());

  std::vector<bool> seen(p, false);
  for (std::uint64_t a = 1; a < p; ++a) {
    if (seen[a]) continue;
    std::vector<std::uint64_t> cls;
    for (std::uint64_t h : powers) cls.push_back(mul_mod(a, h, p));
    std::sort(cls.begin(), cls.end());
    for (std::uint64_t x : cls) seen[x] = true;
    sys.classes.push_back(std::move(cls));
  }
  for (const auto& cls : sys.classes) sys.sums.push_back(class_sum(cls, 1, p));
  sys.negative_index = static_cast<std::size_t>(
      std::min_element(sys.sums.begin(), sys.sums.end()) - sys.sums.begin());
  sys.lemma_bound = -std::sqrt(static_cast<double>(sys.s) / (k - 2));
  sys.lemma_holds = sys.sums[sys.negative_index] <= sys.lemma_bound + kTol;
  if (check == LemmaCheck::kEnforce && !sys.lemma_holds) {
    fail(ErrorCode::kVerification, "smallest class sum " + std::to_string(sys.sums[sys.negative_index]) +
                                       " exceeds -sqrt(s/(k-2)) = " + std::to_string(sys.lemma_bound) +
                                       " for p = " + std::to_string(p) + ", k = " + std::to_string(k));
  }
  return sys;
}

std::vector<double> scaled_class_sums(const ResidueClassSystem& sys, std::uint64_t beta) {
  require(beta % sys.p != 0, ErrorCode::kInvalidArgument, "beta must be a unit mod p");
  std::vector<double> out;
  for (const auto& cls : sys.classes) out.push_back(class_sum(cls, beta % sys.p, sys.p));
  return out;
}

std::vector<std::uint64_t> sample_points(const ResidueClassSystem& sys) {
  const std::uint64_t inv = inverse_mod(sys.beta % sys.p, sys.p);
  std::vector<std::uint64_t> out;
  for (std::uint64_t a : sys.classes[sys.negative_index]) out.push_back(mul_mod(inv, a, sys.p));
  std::sort(out.begin(), out.end());
  return out;
}

bool prime_is_usable(std::uint64_t p, int k, std::uint64_t beta) {
  const double s = static_cast<double>((p - 1) / static_cast<std::uint64_t>(k));
  return p > beta && p % static_cast<std::uint64_t>(k) == 1 &&
         1.0 + std::sqrt(s * (k - 2)) <= std::sqrt(static_cast<double>(p));
}

PrimeInequality prime_inequality_check(const SparseCosinePolynomial& T, const OddPolynomial& f,
                                       std::uint64_t p) {
  require(f.is_monomial(), ErrorCode::kInvalidArgument, "the per-prime check needs f = beta x^k");
  require(f.leading() < p, ErrorCode::kInvalidArgument, "p must exceed beta");
  const auto beta = static_cast<std::uint64_t>(f.leading());
  const int k = f.degree();
  check_params(p, k, beta);
  require(prime_is_usable(p, k, beta), ErrorCode::kInvalidArgument,
          "p = " + std::to_string(p) + " fails 1 + sqrt(s(k-2)) <= sqrt(p)");

  PrimeInequality out;
  out.p = p;
  // p does not divide beta, so p | beta j^k exactly when p | j.
  out.lhs = T.b0();
  for (const auto& t : T.terms()) {
    if (t.freq % p == 0) out.lhs += t.coeff;
  }
  const double s = static_cast<double>((p - 1) / static_cast<std::uint64_t>(k));
  out.rhs = 1.0 / std::sqrt(static_cast<double>(p));
  out.u_bound = 1.0 / (1.0 + std::sqrt(s * (k - 2)));
  const ResidueClassSystem sys = build_classes(p, k, beta, LemmaCheck::kReport);
  for (std::uint64_t a : sample_points(sys)) out.sample_sum += T.eval_rational(static_cast<std::int64_t>(a), p);
  // Summing T over the sample points gives s lhs + A (1 - lhs) >= 0.
  out.class_min = sys.sums[sys.negative_index];
  out.class_bound = -out.class_min / (s - out.class_min);
  out.lemma_holds = sys.lemma_holds;
  out.pass = out.lhs >= out.rhs - kTol;
  out.u_pass = out.lhs >= out.u_bound - kTol;
  out.class_pass = out.lhs >= out.class_bound - kTol;
  return out;
}

LowerBound gamma_lower_bound(std::uint64_t n, int k, std::uint64_t m_cap, std::uint64_t beta) {
  require(n >= 2, ErrorCode::kInvalidArgument, "n must be at least 2");
  require(k >= 3 && k % 2 == 1, ErrorCode::kInvalidArgument, "k must be odd and at least 3");
  LowerBound out;
  for (int i = 1; i <= k; ++i) out.totient_k += std::gcd(i, k) == 1;
  const double log_n = std::log(static_cast<double>(n));
  double theta = 0.0, R = 0.0;
  for (std::uint64_t p : primes_up_to(m_cap)) {
    if (!prime_is_usable(p, k, beta)) continue;
    const double lp = std::log(static_cast<double>(p));
    theta += lp;
    R += lp / std::sqrt(static_cast<double>(p));
    ++out.primes_used;
    const double value = (R - log_n) / theta;
    if (value > out.bound) {
      out.bound = value;
      out.best_m = p;
    }
  }
  return out;
}

}  // namespace vdc
