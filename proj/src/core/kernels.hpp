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
#include <vector>

#include "core/poly.hpp"

namespace vdc {

enum class Provenance { kFejer, kSurrogate, kWitness, kOther };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct CosineTerm {
  std::uint64_t freq;
  double coeff;
};

// b0 + sum_t coeff_t cos(2 pi freq_t x), terms sorted by strictly increasing
// frequency, every frequency >= 1.
class SparseCosinePolynomial {
 public:
  SparseCosinePolynomial() = default;
  SparseCosinePolynomial(double b0, std::vector<CosineTerm> terms, Provenance meta);

  double b0() const { return b0_; }
  std::span<const CosineTerm> terms() const { return terms_; }
  Provenance meta() const { return meta_; }
  std::size_t size() const { return terms_.size(); }
  std::uint64_t max_frequency() const { return terms_.empty() ? 0 : terms_.back().freq; }
  double coefficient_sum() const;  // b0 + sum of coefficients
  double coeff_at(std::uint64_t freq) const;

  // Value at a real point; phases freq * x are reduced mod 1 in double-double.
  double eval(double x) const;
  // Value at the rational a/q with phases reduced exactly mod q.
  double eval_rational(std::int64_t a, std::uint64_t q) const;
  // Value at a/q + kappa: exact rational phase plus a reduced real offset.
  double eval_near_rational(std::int64_t a, std::uint64_t q, double kappa) const;

  // Values at x_i = (first + i) / points for i in [0, out.size()).
  void eval_grid(std::uint64_t points, std::uint64_t first, std::span<double> out) const;

 private:
  double b0_ = 0.0;
  std::vector<CosineTerm> terms_;
  Provenance meta_ = Provenance::kOther;
};

// Adds scale * src (all terms and b0) into a frequency -> coefficient accumulator.
class CosineAccumulator {
 public:
  void add(const SparseCosinePolynomial& src, double scale);
  void add_constant(double c) { b0_ += c; }
  SparseCosinePolynomial finish(Provenance meta) const;

 private:
  double b0_ = 0.0;
  std::vector<CosineTerm> terms_;
};

// Normalized Fejer kernel F_n: b0 = 1/n, coefficient 2(1/n - j/n^2) at j.
SparseCosinePolynomial fejer(std::uint64_t n);

// Closed form F_n(x) = (sin(pi n x) / (n sin(pi x)))^2.
double fejer_value(std::uint64_t n, double x);

// One retained surrogate index j with its raw (unnormalized) weight.
struct SurrogateTerm {
  std::uint64_t j;
  std::uint64_t freq;  // f(d j)
  double weight;       // 2 a_k k d^k j^(k-1) (1/n - a_k (d j)^k / n^2)
};

// Indices j >= j0 with a_k (d j)^k <= n; throws kEmptyRange when none remain.
std::vector<SurrogateTerm> surrogate_terms(const OddPolynomial& f, std::uint64_t n,
                                           std::uint64_t d);

// Normalizer K: the sum of the raw weights, so that G_{n,d}(0) = 1.
double surrogate_norm(const OddPolynomial& f, std::uint64_t n, std::uint64_t d);

// G_{n,d}(x) = (1/K) sum_j weight_j cos(2 pi f(d j) x).
SparseCosinePolynomial build_surrogate(const OddPolynomial& f, std::uint64_t n, std::uint64_t d);

// G_{n,d}(a/q + kappa) - S_d(af, q)/q * F_n(kappa).
double major_arc_residual(const OddPolynomial& f, std::uint64_t n, std::uint64_t d,
                          std::int64_t a, std::uint64_t q, double kappa);

}  // namespace vdc
