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
#include <vector>

#include "core/kernels.hpp"
#include "core/poly.hpp"

namespace vdc {

struct GammaBracket {
  std::vector<std::uint64_t> spectrum;
  double lower = 0.0;  // optimum of the program restricted to finitely many points
  double upper = 1.0;  // b0 of the scan-certified feasible polynomial
  std::uint64_t grid_points = 0;  // final grid
  int rounds = 0;
  bool converged = false;  // final scan found no violation above the tolerance
  double violation = 0.0;  // -min of the grid optimizer before lifting (0 if none)
  SparseCosinePolynomial certified;  // (T + violation) / (1 + violation)
};

struct BracketOptions {
  std::uint64_t grid_points = 0;  // 0 picks 4 * max(spectrum), rounded up to even
  int max_rounds = 8;
  double tolerance = 1e-6;        // accepted violation of the grid optimizer
  unsigned threads = 0;
};

// Brackets min b0 over nonnegative normed cosine polynomials with nonnegative
// coefficients and frequencies in `spectrum`. The lower end solves the program
// on a finite point set; the upper end lifts that optimizer by its scanned
// violation. While the violation exceeds the tolerance the grid is doubled and
// the negative local minima of the last optimizer join the point set.
GammaBracket gamma_plus_bracket(std::vector<std::uint64_t> spectrum,
                                const BracketOptions& options = {});

struct DiffAvoidingSet {
  std::uint64_t N = 0;
  std::vector<std::uint64_t> elements;
  std::uint64_t size() const { return elements.size(); }
  std::uint64_t nodes = 0;  // branch and bound nodes visited
};

// Largest A in {1..N} with no difference a - b equal to a positive value of f.
DiffAvoidingSet max_diff_avoiding(const OddPolynomial& f, std::uint64_t N,
                                  std::uint64_t cap = 64);

// True when no two elements of `set` differ by a positive value of f.
bool avoids_values(const OddPolynomial& f, const std::vector<std::uint64_t>& set);

}  // namespace vdc
