// Copyright 2026 The rankrange Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RANKRANGE_SIMPLEX_HPP_
#define RANKRANGE_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

#include "rankrange/matrix.hpp"

namespace rankrange {

/// minimize c.x  subject to  A x = b,  x >= 0  (A dense, row-major).
struct LinearProgram {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;
  RealVector b;
  RealVector c;  // empty means pure feasibility (c = 0)
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  RealVector x;
  double objective = 0.0;
  /// Phase-one optimum: sum of artificial variables.
  double infeasibility = 0.0;
  int pivots = 0;
};

/// Two-phase primal simplex with Bland's rule. The problem is declared
/// infeasible when the phase-one optimum exceeds `feasibility_tol`.
LpSolution solve_lp(const LinearProgram& lp, double feasibility_tol = 1e-9);

}  // namespace rankrange

#endif  // RANKRANGE_SIMPLEX_HPP_
