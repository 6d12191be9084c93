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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "core/numeric.hpp"

namespace vdc {

// Integer polynomial f(x) = a_k x^k + ... + a_1 x with every even-index
// coefficient zero, a_k > 0 and k >= 3 (hence k odd). Immutable.
class OddPolynomial {
 public:
  // coeffs[i] is the coefficient of x^(i+1). Trailing zeros are dropped.
  static OddPolynomial make(std::span<const BigInt> coeffs);
  static OddPolynomial make(std::span<const std::int64_t> coeffs);
  // Comma separated coefficients, lowest power first: "2,0,3" is 3x^3 + 2x.
  static OddPolynomial parse(std::string_view literal);

  int degree() const { return static_cast<int>(coeffs_.size()); }
  // Smallest power with a nonzero coefficient.
  int least_index() const { return least_index_; }
  const BigInt& content() const { return content_; }
  const BigInt& leading() const { return coeffs_.back(); }
  // Coefficient of x^power (zero outside 1..k).
  const BigInt& coeff(int power) const;
  std::span<const BigInt> coefficients() const { return coeffs_; }

  BigInt eval(const BigInt& x) const;
  BigInt operator()(const BigInt& x) const { return eval(x); }

  // g(x) = f(d x).
  OddPolynomial dilate(const BigInt& d) const;

  bool is_monomial() const { return least_index_ == degree(); }
  std::string literal() const;   // round-trips through parse()
  std::string to_string() const; // human readable, e.g. "3x^3 + 2x"

  friend bool operator==(const OddPolynomial&, const OddPolynomial&) = default;

 private:
  explicit OddPolynomial(std::vector<BigInt> coeffs);

  std::vector<BigInt> coeffs_;
  int least_index_ = 0;
  BigInt content_;
};

// g(x) = f(d x) mod q with coefficients pre-reduced, for hot loops over x.
class ModularPolynomial {
 public:
  ModularPolynomial(const OddPolynomial& f, std::uint64_t q, std::uint64_t d = 1);
  std::uint64_t modulus() const { return q_; }
  std::uint64_t operator()(std::uint64_t x) const;

 private:
  std::uint64_t q_;
  std::vector<std::uint64_t> coeffs_;  // index = power - 1
};

// First index j0 >= 1 such that, for all j >= j0, f(d j) >= 1 and
// f(d (j+1)) > f(d j).
std::uint64_t monotone_start(const OddPolynomial& f, std::uint64_t d);

struct ValueList {
  std::vector<std::uint64_t> values;  // f(d j) for j >= first_index, <= n
  std::uint64_t first_index = 1;      // j0
  std::uint64_t skipped = 0;          // indices below j0 dropped
};

// Strictly increasing values f(d j) <= n, skipping the non-monotone prefix.
ValueList values_up_to(const OddPolynomial& f, std::uint64_t n, std::uint64_t d = 1);

// Every value f(j) with j >= 1 and 1 <= f(j) <= limit, including values from
// the non-monotone prefix; sorted, duplicates removed.
std::vector<std::uint64_t> positive_values_up_to(const OddPolynomial& f, std::uint64_t limit);

// f(d j) as an unsigned 64-bit integer; throws kDomain when out of range.
std::uint64_t eval_u64(const OddPolynomial& f, std::uint64_t x);

}  // namespace vdc
