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
#include <optional>
#include <string>
#include <vector>

#include "core/averaging.hpp"
#include "core/kernels.hpp"
#include "core/poly.hpp"

namespace vdc {

// A positive real too large for a double, kept as its natural logarithm.
struct LogMagnitude {
  double log_value = 0.0;
  double mantissa() const;        // in [1, 10)
  long long exponent10() const;   // value = mantissa * 10^exponent10
  std::string to_string() const;  // e.g. "3.14e+5000"
};

struct PaperConstants {
  double c5 = 1.0;
  double c6 = 1.0;
  double c7 = 1.0;
};

// The proof's parameter choice, in log space:
//   d* = c8 exp(c5 delta^-k), c8 = 2 (a_k + 1) max(c5, c6, c7) / c5,
//   n = d*^{k^8}, Q = a_k d*^{1.5 k^6}, R = d*^{k^8 - k^7 + k^5 - 2.5 k^4}.
struct PaperParameters {
  double delta = 0.0;
  int k = 0;
  PaperConstants constants;
  double c8 = 0.0;
  double n_exponent = 0.0;  // powers of d*
  double Q_exponent = 0.0;
  double R_exponent = 0.0;
  LogMagnitude dstar, n, Q, R;
  LogMagnitude predicted_N;       // exp(c5 (k + k^8) delta^-k)
  double predicted_b0_scale = 0.0;  // delta (log N)^{1/k} along the predicted N
  bool q_below_r = false;
};

PaperParameters paper_parameters(double delta, const OddPolynomial& f,
                                 const PaperConstants& constants = {});

struct LocalMin {
  double x = 0.0;  // reduced to [0, 1)
  double value = 0.0;
};

// Golden-section search for a minimum of T on [lo, hi].
LocalMin refine_min(const SparseCosinePolynomial& T, double lo, double hi, int iters);

struct ScanResult {
  std::uint64_t grid_points = 0;
  double grid_min = 0.0;
  double grid_argmin = 0.0;
  double refined_min = 0.0;
  double refined_argmin = 0.0;
  bool undersampled = false;  // grid_points < 4 * max frequency
};

// Uniform-grid scan followed by golden-section refinement around the 32
// lowest grid points.
ScanResult scan_min(const SparseCosinePolynomial& T, std::uint64_t grid_points,
                    int refine_iters = 60, unsigned threads = 0);

struct WitnessReport {
  double delta = 0.0;
  std::uint64_t n = 0;
  double b0 = 0.0;
  double coeff_sum = 0.0;
  std::uint64_t max_frequency = 0;
  std::uint64_t term_count = 0;             // distinct frequencies after merging
  std::vector<std::uint64_t> moduli;        // d_j
  std::vector<std::uint64_t> level_terms;   // surrogate terms per d_j
  bool coefficients_nonnegative = false;
  bool spectrum_in_values = false;          // every frequency is a value of f
  bool desk = true;
  std::optional<ScanResult> scan;
  std::optional<SchemeVerdict> scheme_verdict;
  std::string caveat;
};

struct Witness {
  SparseCosinePolynomial T;
  WitnessReport report;
};

// T(x) = delta + ((1 - delta) / Lambda) sum_j lambda^j G_{n, d_j}(x).
Witness build_witness(const OddPolynomial& f, double delta, const AveragingScheme& scheme,
                      std::uint64_t n);

// True when every frequency of T equals f(x) for some integer x >= 1.
bool spectrum_in_values(const OddPolynomial& f, const SparseCosinePolynomial& T);

// Smallest delta whose witness over a fixed chain of moduli keeps
// scan_min >= -tolerance at this n. The witness is affine in delta, so one scan
// at a probe delta gives the exact threshold, which is then confirmed by a
// rebuild and a second scan.
struct DeltaSearch {
  double delta = 1.0;
  double probe_h_min = 0.0;  // minimum of the averaged surrogate part
  std::uint64_t max_frequency = 0;
  double scan_min = 0.0;     // confirmation scan at the returned delta
  bool confirmed = false;
  double scale = 0.0;        // delta (log N)^{1/k}
};
DeltaSearch min_passing_delta(const OddPolynomial& f, const AveragingScheme& scheme,
                              std::uint64_t n, std::uint64_t grid_points, double tolerance,
                              unsigned threads = 0);

}  // namespace vdc
