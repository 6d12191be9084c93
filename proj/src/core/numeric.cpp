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

#include "core/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <tuple>
#include <string>
#include <thread>

#include "core/error.hpp"

namespace vdc {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t new_r = static_cast<std::int64_t>(a % m);
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quotient * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quotient * new_r);
  }
  require(r == 1, ErrorCode::kDomain,
          std::to_string(a) + " is not invertible mod " + std::to_string(m));
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t gcd_with_power(std::uint64_t q, std::uint64_t d, int l) {
  std::uint64_t g = 1;
  std::uint64_t rest = q;
  for (int i = 0; i < l && rest > 1; ++i) {
    const std::uint64_t t = std::gcd(rest, d);
    if (t == 1) break;
    g *= t;
    rest /= t;
  }
  return g;
}

std::uint64_t reduce_mod(const BigInt& x, std::uint64_t m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

double ratio_to_double(const BigInt& num, const BigInt& den) {
  if (num == 0) return 0.0;
  // Scale so that the integer quotient carries 64 significant bits.
  const auto nb = static_cast<long>(boost::multiprecision::msb(abs(num)));
  const auto db = static_cast<long>(boost::multiprecision::msb(abs(den)));
  const long shift = 64 - (nb - db);
  BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
  return std::ldexp(static_cast<long double>(q), static_cast<int>(-shift));
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> smallest_prime_factors(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(limit) + 1, 0);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

namespace {

// Signed representative of r mod q in (-q/2, q/2].
std::int64_t symmetric_residue(std::uint64_t r, std::uint64_t q) {
  r %= q;
  if (2 * static_cast<u128>(r) > q) return -static_cast<std::int64_t>(q - r);
  return static_cast<std::int64_t>(r);
}

}  // namespace

double phase_cos(std::uint64_t r, std::uint64_t q) {
  const std::int64_t t = symmetric_residue(r, q);
  if (t == 0) return 1.0;
  const u128 twice = 2 * static_cast<u128>(t < 0 ? -t : t);
  if (twice == q) return -1.0;
  if (2 * twice == q) return 0.0;
  return std::cos(kTwoPi * static_cast<double>(t) / static_cast<double>(q));
}

double phase_sin(std::uint64_t r, std::uint64_t q) {
  const std::int64_t t = symmetric_residue(r, q);
  if (t == 0) return 0.0;
  const u128 twice = 2 * static_cast<u128>(t < 0 ? -t : t);
  if (twice == q) return 0.0;
  if (2 * twice == q) return t > 0 ? 1.0 : -1.0;
  return std::sin(kTwoPi * static_cast<double>(t) / static_cast<double>(q));
}

double turn_cos(double t) {
  t -= std::floor(t);
  if (t > 0.5) t -= 1.0;
  return std::cos(kTwoPi * t);
}

double frac_product(std::uint64_t freq, double x) {
  const double hi = static_cast<double>(freq >> 32);
  const double lo = static_cast<double>(freq & 0xffffffffULL);
  const double x32 = std::ldexp(x, 32);
  auto frac = [](double v) { return v - std::floor(v); };
  const double p1 = hi * x32;
  const double e1 = std::fma(hi, x32, -p1);
  const double p2 = lo * x;
  const double e2 = std::fma(lo, x, -p2);
  double t = frac(p1) + frac(e1) + frac(p2) + frac(e2);
  t -= std::floor(t);
  return t;
}

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  if (const char* env = std::getenv("VDC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_blocks(std::size_t blocks, unsigned threads,
                     const std::function<void(std::size_t)>& body) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), blocks));
  if (workers <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) body(b);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t b = w; b < blocks; b += workers) body(b);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace vdc
