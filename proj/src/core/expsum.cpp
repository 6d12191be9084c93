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

#include "core/expsum.hpp"

#include <cmath>
#include <numeric>

#include "core/error.hpp"

namespace vdc {

namespace {

std::uint64_t reduce_multiplier(std::int64_t a, std::uint64_t q) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % q;
  const std::uint64_t m = static_cast<std::uint64_t>(-(a + 1)) % q;  // avoids INT64_MIN overflow
  return (q - 1 - m) % q;
}

}  // namespace

CompleteSumResult reduced_sum(const OddPolynomial& f, std::uint64_t d, std::int64_t a,
                              std::uint64_t q) {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  require(d >= 1, ErrorCode::kInvalidArgument, "d must be positive");
  CompleteSumResult out;
  out.q = q;
  out.a = a;
  out.d = d;
  const ModularPolynomial g(f, q, d);
  const std::uint64_t am = reduce_multiplier(a, q);
  double re = 1.0;  // s = 0
  double im = 0.0;
  const std::uint64_t half = (q - 1) / 2;
  for (std::uint64_t s = 1; s <= half; ++s) {
    const std::uint64_t phi = mul_mod(am, g(s), q);
    const std::uint64_t psi = mul_mod(am, g(q - s), q);
    re += phase_cos(phi, q) + phase_cos(psi, q);
    im += phase_sin(phi, q) + phase_sin(psi, q);
  }
  if (q % 2 == 0 && q > 1) {
    const std::uint64_t phi = mul_mod(am, g(q / 2), q);
    re += phase_cos(phi, q);
    im += phase_sin(phi, q);
  }
  out.value = re;
  out.residual_imag = im;
  return out;
}

CompleteSumResult complete_sum(const OddPolynomial& f, std::int64_t a, std::uint64_t q) {
  return reduced_sum(f, 1, a, q);
}

double reference_imag(const OddPolynomial& f, std::uint64_t d, std::int64_t a, std::uint64_t q) {
  const ModularPolynomial g(f, q, d);
  const std::uint64_t am = reduce_multiplier(a, q);
  double im = 0.0;
  for (std::uint64_t s = 0; s < q; ++s) {
    const std::uint64_t phi = mul_mod(am, g(s), q);
    im += std::sin(kTwoPi * static_cast<double>(phi) / static_cast<double>(q));
  }
  return im;
}

std::vector<SumRow> reduced_sums_all(const OddPolynomial& f, std::uint64_t d, std::uint64_t q) {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  require(d >= 1, ErrorCode::kInvalidArgument, "d must be positive");
  const ModularPolynomial g(f, q, d);
  std::vector<std::uint64_t> gs(q);
  for (std::uint64_t s = 0; s < q; ++s) gs[s] = g(s);
  std::vector<double> cos_t(q), sin_t(q), ref_t(q);
  for (std::uint64_t r = 0; r < q; ++r) {
    cos_t[r] = phase_cos(r, q);
    sin_t[r] = phase_sin(r, q);
    ref_t[r] = std::sin(kTwoPi * static_cast<double>(r) / static_cast<double>(q));
  }
  // phi[s] = a g(s) mod q, advanced by one multiplier per row.
  std::vector<std::uint64_t> phi(q, 0);
  std::vector<SumRow> rows(q);
  const std::uint64_t half = (q - 1) / 2;
  for (std::uint64_t a = 0; a < q; ++a) {
    if (a > 0) {
      for (std::uint64_t s = 0; s < q; ++s) {
        phi[s] += gs[s];
        if (phi[s] >= q) phi[s] -= q;
      }
    }
    double re = 1.0, im = 0.0;
    for (std::uint64_t s = 1; s <= half; ++s) {
      const std::uint64_t u = phi[s], v = phi[q - s];
      re += cos_t[u] + cos_t[v];
      im += sin_t[u] + sin_t[v];
    }
    if (q % 2 == 0 && q > 1) {
      re += cos_t[phi[q / 2]];
      im += sin_t[phi[q / 2]];
    }
    double ref = 0.0;
    for (std::uint64_t s = 0; s < q; ++s) ref += ref_t[phi[s]];
    rows[a] = {re, im, ref};
  }
  return rows;
}

std::vector<double> multiplier_sums(const OddPolynomial& f, std::uint64_t d, std::uint64_t q) {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  const ModularPolynomial g(f, q, d);
  std::vector<std::uint32_t> hist(q, 0);
  for (std::uint64_t s = 0; s < q; ++s) ++hist[g(s)];
  std::vector<double> table(q);
  for (std::uint64_t r = 0; r < q; ++r) table[r] = phase_cos(r, q);
  std::vector<double> sums(q, 0.0);
  // S(a) = sum_v hist[v] cos(2 pi a v / q); S(q - a) = S(a) since f is odd.
  const std::uint64_t half = q / 2;
  for (std::uint64_t v = 0; v < q; ++v) {
    if (hist[v] == 0) continue;
    const double w = hist[v];
    std::uint64_t idx = 0;
    for (std::uint64_t a = 0; a <= half; ++a) {
      sums[a] += w * table[idx];
      idx += v;
      if (idx >= q) idx -= q;
    }
  }
  for (std::uint64_t a = half + 1; a < q; ++a) sums[a] = sums[q - a];
  return sums;
}

C0Estimate estimate_c0(const OddPolynomial& f, std::uint64_t q_max, unsigned threads) {
  require(q_max >= 2, ErrorCode::kInvalidArgument, "q_max must be at least 2");
  const double k = f.degree();
  C0Estimate out;
  out.q_max = q_max;
  out.rows.resize(q_max - 1);
  // Blocks interleave small and large q to balance the quadratic cost.
  constexpr std::size_t kBlocks = 64;
  parallel_blocks(kBlocks, threads, [&](std::size_t block) {
    for (std::uint64_t q = 2 + block; q <= q_max; q += kBlocks) {
      const std::vector<double> sums = multiplier_sums(f, 1, q);
      const std::uint64_t content = reduce_mod(f.content(), q);
      const double g = static_cast<double>(std::gcd(content, q));
      const double denom = std::pow(g, 1.0 / k) * std::pow(static_cast<double>(q), 1.0 - 1.0 / k);
      C0SweepRow row;
      row.q = q;
      for (std::uint64_t a = 1; a < q; ++a) {
        if (std::gcd(a, q) != 1) continue;
        const double ratio = std::abs(sums[a]) / denom;
        if (ratio > row.max_ratio) {
          row.max_ratio = ratio;
          row.argmax_a = static_cast<std::int64_t>(a);
        }
      }
      out.rows[q - 2] = row;
    }
  });
  double running = 0.0;
  for (auto& row : out.rows) {
    if (row.max_ratio > running) {
      running = row.max_ratio;
      out.argmax_q = row.q;
      out.argmax_a = row.argmax_a;
    }
    row.running_c0 = running;
  }
  out.c0 = running;
  return out;
}

}  // namespace vdc
