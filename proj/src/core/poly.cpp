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

#include "core/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "core/error.hpp"

namespace vdc {

namespace {

const BigInt kZero = 0;

}  // namespace

OddPolynomial::OddPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  require(!coeffs_.empty(), ErrorCode::kInvalidArgument, "polynomial is zero");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int power = static_cast<int>(i) + 1;
    require(power % 2 == 1 || coeffs_[i] == 0, ErrorCode::kInvalidArgument,
            "even-index coefficient of x^" + std::to_string(power) + " is nonzero");
  }
  require(coeffs_.back() > 0, ErrorCode::kInvalidArgument,
          "leading coefficient must be positive");
  require(degree() >= 3, ErrorCode::kInvalidArgument,
          "degree must be at least 3, got " + std::to_string(degree()));
  least_index_ = 0;
  content_ = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (least_index_ == 0) least_index_ = static_cast<int>(i) + 1;
    content_ = boost::multiprecision::gcd(content_, abs(coeffs_[i]));
  }
}

OddPolynomial OddPolynomial::make(std::span<const BigInt> coeffs) {
  return OddPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

OddPolynomial OddPolynomial::make(std::span<const std::int64_t> coeffs) {
  std::vector<BigInt> c(coeffs.begin(), coeffs.end());
  return OddPolynomial(std::move(c));
}

OddPolynomial OddPolynomial::parse(std::string_view literal) {
  std::vector<BigInt> coeffs;
  std::string token;
  auto flush = [&] {
    std::string t;
    for (char ch : token) {
      if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    }
    require(!t.empty(), ErrorCode::kParse, "empty coefficient in polynomial literal");
    std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    require(start < t.size() &&
                std::all_of(t.begin() + static_cast<long>(start), t.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }),
            ErrorCode::kParse, "bad coefficient '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    coeffs.emplace_back(t);
    token.clear();
  };
  for (char ch : literal) {
    if (ch == ',') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return OddPolynomial(std::move(coeffs));
}

const BigInt& OddPolynomial::coeff(int power) const {
  if (power < 1 || power > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(power - 1)];
}

BigInt OddPolynomial::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc + *it) * x;
  return acc;
}

OddPolynomial OddPolynomial::dilate(const BigInt& d) const {
  require(d >= 1, ErrorCode::kInvalidArgument, "dilation factor must be positive");
  std::vector<BigInt> c(coeffs_.size());
  BigInt dp = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    dp *= d;
    c[i] = coeffs_[i] * dp;
  }
  return OddPolynomial(std::move(c));
}

std::string OddPolynomial::literal() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i];
  }
  return os.str();
}

std::string OddPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int power = degree(); power >= 1; --power) {
    const BigInt& c = coeff(power);
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag;
    os << 'x';
    if (power > 1) os << '^' << power;
  }
  return os.str();
}

ModularPolynomial::ModularPolynomial(const OddPolynomial& f, std::uint64_t q, std::uint64_t d)
    : q_(q) {
  require(q >= 1, ErrorCode::kInvalidArgument, "modulus must be positive");
  coeffs_.resize(static_cast<std::size_t>(f.degree()));
  const std::uint64_t dm = d % q;
  std::uint64_t dp = 1 % q;
  for (int power = 1; power <= f.degree(); ++power) {
    dp = mul_mod(dp, dm, q);
    coeffs_[static_cast<std::size_t>(power - 1)] = mul_mod(reduce_mod(f.coeff(power), q), dp, q);
  }
}

std::uint64_t ModularPolynomial::operator()(std::uint64_t x) const {
  const std::uint64_t xm = x % q_;
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc += *it;
    if (acc >= q_) acc -= q_;
    acc = mul_mod(acc, xm, q_);
  }
  return acc;
}

std::uint64_t monotone_start(const OddPolynomial& f, std::uint64_t d) {
  require(d >= 1, ErrorCode::kInvalidArgument, "dilation factor must be positive");
  // For x >= B = 1 + ceil(sum_{i<k} i|a_i| / a_k), f is increasing and >= 1.
  BigInt lower = 0;
  for (int power = 1; power < f.degree(); ++power) lower += power * abs(f.coeff(power));
  const BigInt bound = 1 + (lower + f.leading() - 1) / f.leading();
  const BigInt j_safe_big = (bound + d - 1) / d;
  const auto j_safe = static_cast<std::uint64_t>(j_safe_big);
  std::uint64_t j0 = j_safe;
  BigInt cur = f.eval(BigInt(d) * j0);
  while (j0 > 1) {
    // Check whether j0 - 1 can join the monotone tail.
    const BigInt prev = f.eval(BigInt(d) * (j0 - 1));
    if (prev >= 1 && cur > prev) {
      cur = prev;
      --j0;
    } else {
      break;
    }
  }
  return j0;
}

std::uint64_t eval_u64(const OddPolynomial& f, std::uint64_t x) {
  const BigInt v = f.eval(BigInt(x));
  require(v >= 0 && v <= std::numeric_limits<std::uint64_t>::max(), ErrorCode::kDomain,
          "polynomial value out of 64-bit range");
  return static_cast<std::uint64_t>(v);
}

ValueList values_up_to(const OddPolynomial& f, std::uint64_t n, std::uint64_t d) {
  ValueList out;
  out.first_index = monotone_start(f, d);
  out.skipped = out.first_index - 1;
  for (std::uint64_t j = out.first_index;; ++j) {
    const BigInt v = f.eval(BigInt(d) * j);
    if (v > n) break;
    out.values.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::vector<std::uint64_t> positive_values_up_to(const OddPolynomial& f, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  const std::uint64_t j0 = monotone_start(f, 1);
  for (std::uint64_t j = 1;; ++j) {
    const BigInt v = f.eval(BigInt(j));
    if (j >= j0 && v > limit) break;
    if (v >= 1 && v <= limit) out.push_back(static_cast<std::uint64_t>(v));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace vdc
