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

#include "core/witness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "core/error.hpp"
#include "core/numeric.hpp"

namespace vdc {

double LogMagnitude::mantissa() const {
  const double l10 = log_value / std::numbers::ln10;
  return std::pow(10.0, l10 - std::floor(l10));
}

long long LogMagnitude::exponent10() const {
  return static_cast<long long>(std::floor(log_value / std::numbers::ln10));
}

std::string LogMagnitude::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6fe%+lld", mantissa(), exponent10());
  return buf;
}

PaperParameters paper_parameters(double delta, const OddPolynomial& f,
                                 const PaperConstants& constants) {
  require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  require(constants.c5 > 0.0 && constants.c6 > 0.0 && constants.c7 > 0.0,
          ErrorCode::kInvalidArgument, "c5, c6, c7 must be positive");
  PaperParameters pp;
  pp.delta = delta;
  pp.k = f.degree();
  pp.constants = constants;
  const double k = pp.k;
  const double ak = ratio_to_double(f.leading(), 1);
  const double cmax = std::max({constants.c5, constants.c6, constants.c7});
  pp.c8 = 2.0 * (ak + 1.0) * cmax / constants.c5;
  pp.dstar.log_value = std::log(pp.c8) + constants.c5 * std::pow(delta, -k);
  pp.n_exponent = std::pow(k, 8);
  pp.Q_exponent = 1.5 * std::pow(k, 6);
  pp.R_exponent = std::pow(k, 8) - std::pow(k, 7) + std::pow(k, 5) - 2.5 * std::pow(k, 4);
  pp.n.log_value = pp.n_exponent * pp.dstar.log_value;
  pp.Q.log_value = std::log(ak) + pp.Q_exponent * pp.dstar.log_value;
  pp.R.log_value = pp.R_exponent * pp.dstar.log_value;
  const double log_n_pred = constants.c5 * (k + std::pow(k, 8)) * std::pow(delta, -k);
  pp.predicted_N.log_value = log_n_pred;
  pp.predicted_b0_scale = delta * std::pow(log_n_pred, 1.0 / k);
  pp.q_below_r = pp.Q.log_value < pp.R.log_value;
  return pp;
}

namespace {

constexpr std::size_t kCandidates = 32;
constexpr std::uint64_t kChunk = std::uint64_t{1} << 15;

struct Candidate {
  double value;
  std::uint64_t index;
  bool operator<(const Candidate& o) const {
    return value < o.value || (value == o.value && index < o.index);
  }
};

void keep_lowest(std::vector<Candidate>& pool, std::size_t limit) {
  std::sort(pool.begin(), pool.end());
  if (pool.size() > limit) pool.resize(limit);
}

}  // namespace

LocalMin refine_min(const SparseCosinePolynomial& T, double lo, double hi, int iters) {
  const double r = std::numbers::phi - 1.0;
  double a = lo, b = hi;
  double x1 = b - r * (b - a), x2 = a + r * (b - a);
  double f1 = T.eval(x1), f2 = T.eval(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = T.eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = T.eval(x2);
    }
  }
  LocalMin out = f1 <= f2 ? LocalMin{x1, f1} : LocalMin{x2, f2};
  out.x -= std::floor(out.x);
  return out;
}

ScanResult scan_min(const SparseCosinePolynomial& T, std::uint64_t grid_points, int refine_iters,
                    unsigned threads) {
  require(grid_points >= 2, ErrorCode::kInvalidArgument, "grid needs at least two points");
  require(refine_iters >= 0, ErrorCode::kInvalidArgument, "refinement depth must be nonnegative");
  ScanResult res;
  res.grid_points = grid_points;
  res.undersampled = grid_points < 4 * T.max_frequency();

  const std::size_t blocks = static_cast<std::size_t>((grid_points + kChunk - 1) / kChunk);
  std::vector<std::vector<Candidate>> pools(blocks);
  parallel_blocks(blocks, threads, [&](std::size_t b) {
    const std::uint64_t first = b * kChunk;
    const std::uint64_t count = std::min(kChunk, grid_points - first);
    std::vector<double> values(count);
    T.eval_grid(grid_points, first, values);
    std::vector<Candidate> pool;
    pool.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) pool.push_back({values[i], first + i});
    std::partial_sort(pool.begin(), pool.begin() + std::min<std::size_t>(kCandidates, count),
                      pool.end());
    pool.resize(std::min<std::size_t>(kCandidates, count));
    pools[b] = std::move(pool);
  });
  std::vector<Candidate> all;
  for (auto& p : pools) all.insert(all.end(), p.begin(), p.end());
  keep_lowest(all, kCandidates);

  const double h = 1.0 / static_cast<double>(grid_points);
  res.grid_min = all.front().value;
  res.grid_argmin = static_cast<double>(all.front().index) * h;
  res.refined_min = res.grid_min;
  res.refined_argmin = res.grid_argmin;

  std::vector<LocalMin> refined(all.size());
  parallel_blocks(all.size(), threads, [&](std::size_t i) {
    const double x = static_cast<double>(all[i].index) * h;
    refined[i] = refine_min(T, x - h, x + h, refine_iters);
  });
  for (const auto& r : refined) {
    if (r.value < res.refined_min) {
      res.refined_min = r.value;
      res.refined_argmin = r.x;
    }
  }
  return res;
}

bool spectrum_in_values(const OddPolynomial& f, const SparseCosinePolynomial& T) {
  const std::uint64_t j0 = monotone_start(f, 1);
  std::vector<BigInt> prefix;
  for (std::uint64_t x = 1; x < j0; ++x) prefix.push_back(f(BigInt(x)));
  for (const auto& term : T.terms()) {
    const BigInt v = term.freq;
    if (std::find(prefix.begin(), prefix.end(), v) != prefix.end()) continue;
    // f is increasing from j0 on: bracket v by doubling, then bisect.
    std::uint64_t lo = j0, hi = j0;
    while (f(BigInt(hi)) < v) {
      lo = hi;
      hi *= 2;
    }
    while (lo < hi) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      if (f(BigInt(mid)) < v) {
        lo = mid + 1;
      } else {
        hi = mid;
      }
    }
    if (f(BigInt(lo)) != v) return false;
  }
  return true;
}

Witness build_witness(const OddPolynomial& f, double delta, const AveragingScheme& scheme,
                      std::uint64_t n) {
  require(delta > 0.0 && delta < 1.0, ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  require(n >= 1, ErrorCode::kInvalidArgument, "n must be positive");
  WitnessReport report;
  report.delta = delta;
  report.n = n;
  report.desk = scheme.desk;

  CosineAccumulator acc;
  acc.add_constant(delta);
  for (int j = 0; j <= scheme.s; ++j) {
    const auto d = scheme.modulus(j);
    if (!d) {
      fail(ErrorCode::kEmptyRange,
           "modulus d_" + std::to_string(j) + " = exp(" +
               std::to_string(scheme.log_moduli[static_cast<std::size_t>(j)]) +
               ") admits no surrogate index at n = " + std::to_string(n));
    }
    SparseCosinePolynomial g;
    try {
      g = build_surrogate(f, n, *d);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEmptyRange) throw;
      fail(ErrorCode::kEmptyRange, "modulus d_" + std::to_string(j) + " = " + std::to_string(*d) +
                                       " admits no surrogate index at n = " + std::to_string(n));
    }
    report.moduli.push_back(*d);
    report.level_terms.push_back(g.size());
    acc.add(g, (1.0 - delta) * std::pow(scheme.lambda, j) / scheme.Lambda);
  }
  SparseCosinePolynomial T = acc.finish(Provenance::kWitness);

  report.b0 = T.b0();
  report.coeff_sum = T.coefficient_sum();
  report.max_frequency = T.max_frequency();
  report.term_count = T.size();
  report.coefficients_nonnegative =
      std::all_of(T.terms().begin(), T.terms().end(), [](const CosineTerm& t) { return t.coeff >= 0.0; });
  report.spectrum_in_values = spectrum_in_values(f, T);
  report.caveat =
      "desk-scale parameters: n is far below the size at which nonnegativity is proven, so the "
      "scan minimum is numerical evidence rather than a guarantee";
  return {std::move(T), std::move(report)};
}

DeltaSearch min_passing_delta(const OddPolynomial& f, const AveragingScheme& scheme,
                              std::uint64_t n, std::uint64_t grid_points, double tolerance,
                              unsigned threads) {
  require(tolerance >= 0.0, ErrorCode::kInvalidArgument, "tolerance must be nonnegative");
  constexpr double kProbe = 0.5;
  constexpr double kMargin = 1e-9;
  DeltaSearch out;
  const Witness probe = build_witness(f, kProbe, scheme, n);
  const ScanResult ps = scan_min(probe.T, grid_points, 60, threads);
  // T = delta + (1 - delta) H, so the threshold is linear in min H.
  const double h_min = (ps.refined_min - kProbe) / (1.0 - kProbe);
  out.probe_h_min = h_min;
  double delta = (-tolerance - h_min) / (1.0 - h_min) + kMargin;
  delta = std::clamp(delta, kMargin, 1.0 - kMargin);

  const Witness w = build_witness(f, delta, scheme, n);
  const ScanResult ws = scan_min(w.T, grid_points, 60, threads);
  out.delta = delta;
  out.max_frequency = w.report.max_frequency;
  out.scan_min = ws.refined_min;
  out.confirmed = ws.refined_min >= -tolerance;
  const double log_n = std::log(static_cast<double>(out.max_frequency));
  out.scale = delta * std::pow(log_n, 1.0 / f.degree());
  return out;
}

}  // namespace vdc
