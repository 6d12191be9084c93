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

#include "core/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "core/error.hpp"
#include "core/expsum.hpp"

namespace vdc {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::kFejer: return "fejer";
    case Provenance::kSurrogate: return "surrogate";
    case Provenance::kWitness: return "witness";
    case Provenance::kOther: break;
  }
  return "other";
}

Provenance provenance_from_name(const std::string& name) {
  if (name == "fejer") return Provenance::kFejer;
  if (name == "surrogate") return Provenance::kSurrogate;
  if (name == "witness") return Provenance::kWitness;
  return Provenance::kOther;
}

SparseCosinePolynomial::SparseCosinePolynomial(double b0, std::vector<CosineTerm> terms,
                                               Provenance meta)
    : b0_(b0), terms_(std::move(terms)), meta_(meta) {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    require(terms_[i].freq >= 1, ErrorCode::kInvalidArgument, "frequency must be positive");
    require(i == 0 || terms_[i].freq > terms_[i - 1].freq, ErrorCode::kInvalidArgument,
            "frequencies must be distinct and increasing");
  }
}

double SparseCosinePolynomial::coefficient_sum() const {
  double s = b0_;
  for (const auto& t : terms_) s += t.coeff;
  return s;
}

double SparseCosinePolynomial::coeff_at(std::uint64_t freq) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), freq,
                             [](const CosineTerm& t, std::uint64_t f) { return t.freq < f; });
  return (it != terms_.end() && it->freq == freq) ? it->coeff : 0.0;
}

double SparseCosinePolynomial::eval(double x) const {
  double v = b0_;
  for (const auto& t : terms_) v += t.coeff * turn_cos(frac_product(t.freq, x));
  return v;
}

double SparseCosinePolynomial::eval_rational(std::int64_t a, std::uint64_t q) const {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  std::int64_t am = a % static_cast<std::int64_t>(q);
  if (am < 0) am += static_cast<std::int64_t>(q);
  double v = b0_;
  for (const auto& t : terms_) {
    v += t.coeff * phase_cos(mul_mod(t.freq % q, static_cast<std::uint64_t>(am), q), q);
  }
  return v;
}

double SparseCosinePolynomial::eval_near_rational(std::int64_t a, std::uint64_t q,
                                                  double kappa) const {
  require(q >= 1, ErrorCode::kInvalidArgument, "q must be positive");
  std::int64_t am = a % static_cast<std::int64_t>(q);
  if (am < 0) am += static_cast<std::int64_t>(q);
  const bool negative = kappa < 0;
  const double mag = std::abs(kappa);
  double v = b0_;
  for (const auto& t : terms_) {
    const std::uint64_t r = mul_mod(t.freq % q, static_cast<std::uint64_t>(am), q);
    double off = frac_product(t.freq, mag);
    if (negative) off = -off;
    v += t.coeff * turn_cos(static_cast<double>(r) / static_cast<double>(q) + off);
  }
  return v;
}

void SparseCosinePolynomial::eval_grid(std::uint64_t points, std::uint64_t first,
                                       std::span<double> out) const {
  require(points >= 1, ErrorCode::kInvalidArgument, "grid must have points");
  // Rotation recurrence re-anchored at absolute indices that are multiples of
  // kAnchor, so a value never depends on how the grid was chunked.
  constexpr std::uint64_t kAnchor = 256;
  const std::size_t n = terms_.size();
  std::vector<double> coeff(n), step_c(n), step_s(n), freq_mod(n), c(n), s(n);
  for (std::size_t t = 0; t < n; ++t) {
    coeff[t] = terms_[t].coeff;
    const std::uint64_t fm = terms_[t].freq % points;
    freq_mod[t] = static_cast<double>(fm);
    step_c[t] = phase_cos(fm, points);
    step_s[t] = phase_sin(fm, points);
  }
  const std::uint64_t last = first + out.size();
  std::uint64_t g = first - first % kAnchor;
  while (g < last) {
    const std::uint64_t block_end = std::min(g + kAnchor, last);
    for (std::size_t t = 0; t < n; ++t) {
      const std::uint64_t r = mul_mod(terms_[t].freq % points, g % points, points);
      c[t] = phase_cos(r, points);
      s[t] = phase_sin(r, points);
    }
    for (; g < block_end; ++g) {
      if (g >= first) {
        double v = 0.0;
        for (std::size_t t = 0; t < n; ++t) v += coeff[t] * c[t];
        out[g - first] = b0_ + v;
      }
      for (std::size_t t = 0; t < n; ++t) {
        const double nc = c[t] * step_c[t] - s[t] * step_s[t];
        const double ns = s[t] * step_c[t] + c[t] * step_s[t];
        c[t] = nc;
        s[t] = ns;
      }
    }
  }
}

void CosineAccumulator::add(const SparseCosinePolynomial& src, double scale) {
  b0_ += scale * src.b0();
  std::vector<CosineTerm> merged;
  merged.reserve(terms_.size() + src.size());
  auto a = terms_.begin();
  auto b = src.terms().begin();
  const auto b_end = src.terms().end();
  while (a != terms_.end() || b != b_end) {
    if (b == b_end || (a != terms_.end() && a->freq < b->freq)) {
      merged.push_back(*a++);
    } else if (a == terms_.end() || b->freq < a->freq) {
      merged.push_back({b->freq, scale * b->coeff});
      ++b;
    } else {
      merged.push_back({a->freq, a->coeff + scale * b->coeff});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
}

SparseCosinePolynomial CosineAccumulator::finish(Provenance meta) const {
  return SparseCosinePolynomial(b0_, terms_, meta);
}

SparseCosinePolynomial fejer(std::uint64_t n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "Fejer order must be positive");
  const double nd = static_cast<double>(n);
  std::vector<CosineTerm> terms;
  terms.reserve(n);
  for (std::uint64_t j = 1; j < n; ++j) {
    terms.push_back({j, 2.0 * (static_cast<double>(n - j) / (nd * nd))});
  }
  return SparseCosinePolynomial(1.0 / nd, std::move(terms), Provenance::kFejer);
}

double fejer_value(std::uint64_t n, double x) {
  double t = x - std::floor(x);
  if (t > 0.5) t -= 1.0;
  const double nd = static_cast<double>(n);
  const double den = std::sin(std::numbers::pi * t);
  if (std::abs(den) < 1e-300) return 1.0;
  const double num = std::sin(std::numbers::pi * frac_product(n, std::abs(t)));
  const double r = num / (nd * den);
  return r * r;
}

std::vector<SurrogateTerm> surrogate_terms(const OddPolynomial& f, std::uint64_t n,
                                           std::uint64_t d) {
  require(n >= 1 && d >= 1, ErrorCode::kInvalidArgument, "n and d must be positive");
  const int k = f.degree();
  const BigInt& ak = f.leading();
  const BigInt nb = n;
  const std::uint64_t j0 = monotone_start(f, d);
  std::vector<SurrogateTerm> out;
  for (std::uint64_t j = j0;; ++j) {
    BigInt dj = BigInt(d) * j;
    BigInt lead = ak;
    for (int i = 0; i < k; ++i) lead *= dj;
    if (lead > nb) break;
    // weight = (2k/j) t (1 - t) with t = a_k (dj)^k / n, both factors exact ratios.
    const double t = ratio_to_double(lead, nb);
    const double u = ratio_to_double(nb - lead, nb);
    const double w = 2.0 * k / static_cast<double>(j) * t * u;
    const BigInt value = f.eval(dj);
    require(value <= std::numeric_limits<std::uint64_t>::max(), ErrorCode::kDomain,
            "surrogate frequency exceeds 64 bits");
    out.push_back({j, static_cast<std::uint64_t>(value), w});
  }
  double total = 0.0;
  for (const auto& t : out) total += t.weight;
  require(total > 0.0, ErrorCode::kEmptyRange,
          "no surrogate terms: a_k (d j)^k <= n has no solution with positive weight for d=" +
              std::to_string(d) + ", n=" + std::to_string(n));
  return out;
}

double surrogate_norm(const OddPolynomial& f, std::uint64_t n, std::uint64_t d) {
  double total = 0.0;
  for (const auto& t : surrogate_terms(f, n, d)) total += t.weight;
  return total;
}

SparseCosinePolynomial build_surrogate(const OddPolynomial& f, std::uint64_t n, std::uint64_t d) {
  const auto raw = surrogate_terms(f, n, d);
  double K = 0.0;
  for (const auto& t : raw) K += t.weight;
  std::vector<CosineTerm> terms;
  terms.reserve(raw.size());
  for (const auto& t : raw) {
    if (t.weight <= 0.0) continue;  // a_k (d j)^k = n exactly
    require(terms.empty() || t.freq > terms.back().freq, ErrorCode::kInternal,
            "surrogate frequencies collide past the monotone prefix");
    terms.push_back({t.freq, t.weight / K});
  }
  return SparseCosinePolynomial(0.0, std::move(terms), Provenance::kSurrogate);
}

double major_arc_residual(const OddPolynomial& f, std::uint64_t n, std::uint64_t d,
                          std::int64_t a, std::uint64_t q, double kappa) {
  require(std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), q) == 1, ErrorCode::kInvalidArgument,
          "major arc residual needs gcd(a, q) = 1");
  const SparseCosinePolynomial g = build_surrogate(f, n, d);
  const double principal = reduced_sum(f, d, a, q).value / static_cast<double>(q);
  return g.eval_near_rational(a, q, kappa) - principal * fejer_value(n, kappa);
}

}  // namespace vdc
