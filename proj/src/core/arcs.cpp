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

#include "core/arcs.hpp"

#include <cmath>
#include <optional>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace vdc {

Rational exact_rational(double x) {
  require(std::isfinite(x), ErrorCode::kInvalidArgument, "value must be finite");
  int exp = 0;
  const double mant = std::frexp(x, &exp);
  // mant * 2^53 is an integer for every double.
  const auto scaled = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  BigInt num = scaled;
  BigInt den = 1;
  if (exp >= 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return Rational(num, den);
}

namespace {

// |x - a/q| <= 1/(qR)  <=>  |q x - a| * R <= 1.
bool within(const Rational& x, const BigInt& a, const BigInt& q, const Rational& R) {
  Rational diff = Rational(q) * x - Rational(a);
  if (diff < 0) diff = -diff;
  return diff * R <= 1;
}

ArcLocation make_major(const Rational& x, const BigInt& a, const BigInt& q, std::uint64_t Q,
                       const Rational& R) {
  ArcLocation loc;
  loc.kind = ArcKind::kMajor;
  loc.a = static_cast<std::int64_t>(a);
  loc.q = static_cast<std::uint64_t>(q);
  const Rational kappa = x - Rational(a, q);
  loc.kappa = ratio_to_double(numerator(kappa), denominator(kappa));
  loc.Q = Q;
  loc.R = ratio_to_double(numerator(R), denominator(R));
  return loc;
}

}  // namespace

ArcLocation classify(const Rational& x, std::uint64_t Q, const Rational& R) {
  require(x >= 0 && x < 1, ErrorCode::kInvalidArgument, "x must lie in [0, 1)");
  require(Q >= 1 && R > Rational(Q), ErrorCode::kInvalidArgument, "need 1 <= Q < R");

  // q = 1 admits two candidates (0/1 and 1/1); take the closer, then a = 0.
  {
    const bool zero = within(x, 0, 1, R);
    const bool one = within(x, 1, 1, R);
    if (zero || one) {
      const bool pick_one = one && (!zero || (1 - x) < x);
      return make_major(x, pick_one ? 1 : 0, 1, Q, R);
    }
  }

  // Convergents h/k of x = num/den: h_{-1}/k_{-1} = 1/0, h_{-2}/k_{-2} = 0/1.
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt h_prev2 = 0, k_prev2 = 1, h_prev = 1, k_prev = 0;
  while (den != 0) {
    const BigInt a_i = num / den;
    const BigInt h = a_i * h_prev + h_prev2;
    const BigInt k = a_i * k_prev + k_prev2;
    if (k > Q) break;
    if (k > 1 && within(x, h, k, R)) return make_major(x, h, k, Q, R);
    h_prev2 = h_prev;
    k_prev2 = k_prev;
    h_prev = h;
    k_prev = k;
    const BigInt rem = num - a_i * den;
    num = den;
    den = rem;
  }
  ArcLocation loc;
  loc.Q = Q;
  loc.R = ratio_to_double(numerator(R), denominator(R));
  return loc;
}

ArcLocation classify(double x, std::uint64_t Q, double R) {
  require(std::isfinite(R), ErrorCode::kInvalidArgument, "R must be finite");
  return classify(exact_rational(x), Q, exact_rational(R));
}

}  // namespace vdc
