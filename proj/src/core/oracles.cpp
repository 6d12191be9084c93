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

#include "core/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "core/error.hpp"
#include "core/numeric.hpp"
#include "core/simplex.hpp"
#include "core/witness.hpp"

namespace vdc {

namespace {

// Negative local minima of T on a uniform grid, each refined by golden-section
// search and folded into [0, 1/2] (T is even).
std::vector<double> negative_minima(const SparseCosinePolynomial& T, std::uint64_t points) {
  std::vector<double> v(points);
  T.eval_grid(points, 0, v);
  const double h = 1.0 / static_cast<double>(points);
  std::vector<double> out;
  for (std::uint64_t i = 0; i <= points / 2; ++i) {
    const double prev = v[(i + points - 1) % points];
    const double next = v[(i + 1) % points];
    if (v[i] >= 0.0 || v[i] > prev || v[i] > next) continue;
    const double x = static_cast<double>(i) * h;
    double m = refine_min(T, x - h, x + h, 60).x;
    if (m > 0.5) m = 1.0 - m;
    out.push_back(m);
  }
  return out;
}

}  // namespace

GammaBracket gamma_plus_bracket(std::vector<std::uint64_t> spectrum, const BracketOptions& options) {
  require(!spectrum.empty(), ErrorCode::kInvalidArgument, "spectrum must be nonempty");
  std::sort(spectrum.begin(), spectrum.end());
  require(spectrum.front() >= 1, ErrorCode::kInvalidArgument, "spectrum must be positive");
  require(std::adjacent_find(spectrum.begin(), spectrum.end()) == spectrum.end(),
          ErrorCode::kInvalidArgument, "spectrum must be distinct");
  require(options.max_rounds >= 1, ErrorCode::kInvalidArgument, "need at least one round");

  GammaBracket out;
  out.spectrum = spectrum;
  std::uint64_t grid = options.grid_points ? options.grid_points : 4 * spectrum.back();
  grid += grid % 2;
  const std::size_t D = spectrum.size();
  const std::uint64_t scan_points = std::max<std::uint64_t>(16 * spectrum.back(), 1024);
  std::vector<double> cuts;  // off-grid points where earlier optimizers went negative

  for (int round = 1; round <= options.max_rounds; ++round, grid *= 2) {
    // Dual program: maximize y subject to y + sum_i w_i <= 1 and
    // y + sum_i w_i cos(2 pi d x_i) <= 0 for every d, with w >= 0 on the half
    // grid plus the cut points (T is even). y = y+ - y-.
    const std::uint64_t half = grid / 2;
    const std::size_t cols = 2 + static_cast<std::size_t>(half) + 1 + cuts.size();
    std::vector<std::vector<double>> A(D + 1, std::vector<double>(cols, 0.0));
    std::vector<double> b(D + 1, 0.0), c(cols, 0.0);
    b[0] = 1.0;
    c[0] = 1.0;
    c[1] = -1.0;
    for (std::size_t r = 0; r <= D; ++r) {
      A[r][0] = 1.0;
      A[r][1] = -1.0;
      for (std::uint64_t i = 0; i <= half; ++i) {
        A[r][2 + i] = r == 0 ? 1.0 : phase_cos(mul_mod(spectrum[r - 1] % grid, i, grid), grid);
      }
      for (std::size_t i = 0; i < cuts.size(); ++i) {
        A[r][3 + half + i] = r == 0 ? 1.0 : turn_cos(frac_product(spectrum[r - 1], cuts[i]));
      }
    }
    const LpSolution sol = maximize_lp(A, b, c);

    // The row duals are the primal coefficients b0, b_d.
    std::vector<CosineTerm> terms;
    for (std::size_t r = 1; r <= D; ++r) {
      const double coeff = std::max(0.0, sol.duals[r]);
      if (coeff > 0.0) terms.push_back({spectrum[r - 1], coeff});
    }
    const SparseCosinePolynomial T(std::max(0.0, sol.duals[0]), std::move(terms), Provenance::kOther);
    const ScanResult scan = scan_min(T, scan_points, 60, options.threads);
    const double eps = std::max(0.0, -scan.refined_min);
    const double total = T.coefficient_sum();

    out.lower = std::max(out.lower, std::clamp(sol.objective, 0.0, 1.0));
    out.grid_points = grid;
    out.rounds = round;
    out.violation = eps;
    // Lift and renormalize: (T + eps) / (total + eps) is nonnegative with coefficient sum 1.
    CosineAccumulator acc;
    acc.add(T, 1.0 / (total + eps));
    acc.add_constant(eps / (total + eps));
    out.certified = acc.finish(Provenance::kOther);
    out.upper = out.certified.b0();
    out.converged = eps <= options.tolerance;
    if (out.converged) break;
    for (double x : negative_minima(T, scan_points)) cuts.push_back(x);
    if (scan.refined_min < 0.0) {
      double x = scan.refined_argmin;
      cuts.push_back(x > 0.5 ? 1.0 - x : x);
    }
  }
  return out;
}

bool avoids_values(const OddPolynomial& f, const std::vector<std::uint64_t>& set) {
  if (set.size() < 2) return true;
  const auto [lo, hi] = std::minmax_element(set.begin(), set.end());
  const auto forbidden = positive_values_up_to(f, *hi - *lo);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const std::uint64_t diff = set[i] > set[j] ? set[i] - set[j] : set[j] - set[i];
      if (std::binary_search(forbidden.begin(), forbidden.end(), diff)) return false;
    }
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

struct Search {
  std::vector<Mask> conflicts;  // conflicts[v]: vertices at a forbidden distance from v
  Mask best = 0;
  int best_size = 0;
  std::uint64_t nodes = 0;

  // Upper bound on an independent set inside `cand`: a greedy cover of the
  // candidates by cliques of the conflict graph, one element per clique.
  int clique_cover_bound(Mask cand) const {
    int cliques = 0;
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      // Vertices adjacent to every member of the clique built so far.
      Mask pool = cand & conflicts[v];
      while (pool) {
        const Mask u = pool & -pool;
        cand &= ~u;
        pool &= conflicts[std::countr_zero(u)] & ~u;
      }
      ++cliques;
    }
    return cliques;
  }

  void run(Mask chosen, int size, Mask cand) {
    ++nodes;
    if (cand == 0) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(cand) <= best_size) return;
    const int v = std::countr_zero(cand);
    const Mask bit = Mask{1} << v;
    run(chosen | bit, size + 1, cand & ~bit & ~conflicts[v]);
    run(chosen, size, cand & ~bit);
  }
};

}  // namespace

DiffAvoidingSet max_diff_avoiding(const OddPolynomial& f, std::uint64_t N, std::uint64_t cap) {
  require(N >= 1, ErrorCode::kInvalidArgument, "N must be positive");
  require(N <= cap && N <= 64, ErrorCode::kCapExceeded,
          "N = " + std::to_string(N) + " exceeds the search cap " + std::to_string(std::min<std::uint64_t>(cap, 64)));
  const auto forbidden = positive_values_up_to(f, N - 1);

  Search search;
  search.conflicts.assign(N, 0);
  for (std::uint64_t i = 0; i < N; ++i) {
    for (std::uint64_t d : forbidden) {
      if (i + d < N) {
        search.conflicts[i] |= Mask{1} << (i + d);
        search.conflicts[i + d] |= Mask{1} << i;
      }
    }
  }
  // Greedy first-fit gives the initial incumbent.
  Mask greedy = 0;
  for (std::uint64_t i = 0; i < N; ++i) {
    if ((search.conflicts[i] & greedy) == 0) greedy |= Mask{1} << i;
  }
  search.best = greedy;
  search.best_size = std::popcount(greedy);
  const Mask all = N == 64 ? ~Mask{0} : (Mask{1} << N) - 1;
  search.run(0, 0, all);

  DiffAvoidingSet out;
  out.N = N;
  out.nodes = search.nodes;
  for (std::uint64_t i = 0; i < N; ++i) {
    if (search.best >> i & 1) out.elements.push_back(i + 1);
  }
  return out;
}

}  // namespace vdc
