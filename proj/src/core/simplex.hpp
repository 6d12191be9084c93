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

#include <cstddef>
#include <vector>

namespace vdc {

struct LpSolution {
  std::vector<double> x;      // primal optimum
  std::vector<double> duals;  // one per constraint row
  double objective = 0.0;
  std::size_t iterations = 0;
};

// Maximizes c.x subject to A x <= b and x >= 0, with b >= 0 so that the slack
// basis is feasible. Dense tableau with Dantzig pricing and a Bland fallback.
// Throws kNonConvergence when the objective is unbounded or the iteration
// limit is hit.
LpSolution maximize_lp(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                       const std::vector<double>& c, std::size_t max_iterations = 100000);

}  // namespace vdc
