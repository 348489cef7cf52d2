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

#include "rankrange/simplex.hpp"

#include <cmath>
#include <limits>

#include "rankrange/error.hpp"

namespace rankrange {

namespace {

constexpr double kPivotEps = 1e-11;
constexpr int kMaxPivots = 100000;

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), t_((rows + 1) * (cols + 1)) {}

  double& at(std::size_t i, std::size_t j) { return t_[i * (cols_ + 1) + j]; }
  double& rhs(std::size_t i) { return at(i, cols_); }
  double& cost(std::size_t j) { return at(rows_, j); }
  double& value() { return at(rows_, cols_); }

  void pivot(std::size_t r, std::size_t c) {
    const double p = at(r, c);
    for (std::size_t j = 0; j <= cols_; ++j) at(r, j) /= p;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      const double f = at(i, c);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= cols_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> t_;
};

enum class Step { kOptimal, kUnbounded };

/// Bland's rule iterations on the cost row; columns >= `allowed` never enter.
Step iterate(Tableau& t, std::vector<std::size_t>& basis, std::size_t rows, std::size_t allowed,
             int& pivots) {
  while (true) {
    std::size_t enter = allowed;
    for (std::size_t j = 0; j < allowed; ++j) {
      if (t.cost(j) < -kPivotEps) {
        enter = j;
        break;
      }
    }
    if (enter == allowed) return Step::kOptimal;

    std::size_t leave = rows;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rows; ++i) {
      const double v = t.at(i, enter);
      if (v <= kPivotEps) continue;
      const double ratio = t.rhs(i) / v;
      if (ratio < best_ratio - 1e-15 ||
          (std::abs(ratio - best_ratio) <= 1e-15 && leave < rows && basis[i] < basis[leave])) {
        best_ratio = ratio;
        leave = i;
      }
    }
    if (leave == rows) return Step::kUnbounded;
    t.pivot(leave, enter);
    basis[leave] = enter;
    if (++pivots > kMaxPivots) throw NumericalFailure("solve_lp: pivot limit reached", 0.0);
  }
}

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, double feasibility_tol) {
  const std::size_t m = lp.rows;
  const std::size_t n = lp.cols;
  if (lp.a.size() != m * n || lp.b.size() != m || (!lp.c.empty() && lp.c.size() != n)) {
    throw DimensionError("solve_lp: inconsistent problem dimensions");
  }

  // Columns: n structural, then m artificials.
  Tableau t(m, n + m);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = lp.b[i] < 0.0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < n; ++j) t.at(i, j) = sign * lp.a[i * n + j];
    t.at(i, n + i) = 1.0;
    t.rhs(i) = sign * lp.b[i];
    basis[i] = n + i;
  }
  // Phase one: minimize the sum of artificials.
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += t.at(i, j);
    t.cost(j) = -s;
  }
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) total += t.rhs(i);
  t.value() = -total;

  LpSolution out;
  iterate(t, basis, m, n + m, out.pivots);
  out.infeasibility = -t.value();
  if (out.infeasibility > feasibility_tol) {
    out.status = LpStatus::kInfeasible;
    return out;
  }

  // Drive remaining artificials out of the basis where possible.
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(t.at(i, j)) > 1e-9) {
        t.pivot(i, j);
        basis[i] = j;
        ++out.pivots;
        break;
      }
    }
  }

  // Phase two on the original costs.
  for (std::size_t j = 0; j <= n + m; ++j) t.cost(j) = 0.0;
  if (!lp.c.empty()) {
    for (std::size_t j = 0; j < n; ++j) t.cost(j) = lp.c[j];
    for (std::size_t i = 0; i < m; ++i) {
      if (basis[i] >= n) continue;
      const double cb = lp.c[basis[i]];
      if (cb == 0.0) continue;
      for (std::size_t j = 0; j <= n + m; ++j) t.cost(j) -= cb * t.at(i, j);
    }
  }
  if (iterate(t, basis, m, n, out.pivots) == Step::kUnbounded) {
    out.status = LpStatus::kUnbounded;
    return out;
  }

  out.x.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) out.x[basis[i]] = std::max(0.0, t.rhs(i));
  }
  out.objective = 0.0;
  if (!lp.c.empty()) {
    for (std::size_t j = 0; j < n; ++j) out.objective += lp.c[j] * out.x[j];
  }
  out.status = LpStatus::kOptimal;
  return out;
}

}  // namespace rankrange
