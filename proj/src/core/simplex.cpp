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

#include "core/simplex.hpp"

#include <limits>

#include "core/error.hpp"

namespace vdc {

namespace {
constexpr double kEps = 1e-12;
constexpr std::size_t kBlandAfter = 50;
}

LpSolution maximize_lp(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                       const std::vector<double>& c, std::size_t max_iterations) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  require(b.size() == m, ErrorCode::kInvalidArgument, "row count mismatch");
  for (std::size_t i = 0; i < m; ++i) {
    require(A[i].size() == n, ErrorCode::kInvalidArgument, "column count mismatch");
    require(b[i] >= 0.0, ErrorCode::kInvalidArgument, "right-hand side must be nonnegative");
  }

  // Columns: n structural, m slack, then the right-hand side. Row m holds the
  // reduced costs (negated objective).
  const std::size_t width = n + m + 1;
  std::vector<double> t((m + 1) * width, 0.0);
  auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * width + col]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) at(i, j) = A[i][j];
    at(i, n + i) = 1.0;
    at(i, width - 1) = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  LpSolution sol;
  std::size_t degenerate_run = 0;
  for (;;) {
    // Dantzig's rule, falling back to Bland's rule during long runs of
    // degenerate pivots so that the method cannot cycle.
    const bool bland = degenerate_run >= kBlandAfter;
    std::size_t enter = width;
    double most_negative = -kEps;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (at(m, j) < most_negative) {
        enter = j;
        if (bland) break;
        most_negative = at(m, j);
      }
    }
    if (enter == width) break;
    require(sol.iterations < max_iterations, ErrorCode::kNonConvergence,
            "simplex iteration limit reached");

    std::size_t leave = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double a = at(i, enter);
      if (a <= kEps) continue;
      const double ratio = at(i, width - 1) / a;
      if (ratio < best - kEps || (ratio <= best + kEps && leave < m && basis[i] < basis[leave])) {
        best = std::min(best, ratio);
        leave = i;
      }
    }
    require(leave < m, ErrorCode::kNonConvergence, "linear program is unbounded");
    degenerate_run = best <= kEps ? degenerate_run + 1 : 0;

    const double pivot = at(leave, enter);
    for (std::size_t j = 0; j < width; ++j) at(leave, j) /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double factor = at(i, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) at(i, j) -= factor * at(leave, j);
    }
    basis[leave] = enter;
    ++sol.iterations;
  }

  sol.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) sol.x[basis[i]] = at(i, width - 1);
  }
  sol.duals.resize(m);
  for (std::size_t i = 0; i < m; ++i) sol.duals[i] = at(m, n + i);
  sol.objective = at(m, width - 1);
  return sol;
}

}  // namespace vdc
