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

#include <boost/multiprecision/cpp_int.hpp>

namespace vdc {

using Rational = boost::multiprecision::cpp_rational;

enum class ArcKind { kMajor, kMinor };

struct ArcLocation {
  ArcKind kind = ArcKind::kMinor;
  std::int64_t a = 0;      // meaningful for kMajor only
  std::uint64_t q = 0;     // meaningful for kMajor only
  double kappa = 0.0;      // x - a/q
  std::uint64_t Q = 1;
  double R = 2.0;
};

// Exact rational value of a finite double.
Rational exact_rational(double x);

// Major arc membership: is there a/q, gcd(a,q) = 1, q <= Q, |x - a/q| <= 1/(qR)?
// The smallest such q wins, then the smallest |kappa|, then the smallest a.
// Only continued fraction convergents of x need to be examined.
ArcLocation classify(const Rational& x, std::uint64_t Q, const Rational& R);
ArcLocation classify(double x, std::uint64_t Q, double R);

}  // namespace vdc
