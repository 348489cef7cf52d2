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

#ifndef RANKRANGE_MEMBERSHIP_HPP_
#define RANKRANGE_MEMBERSHIP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "rankrange/matrix.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange {

/// Multi-start Riemannian gradient descent on the complex Stiefel manifold.
///
/// Fixed-target mode minimizes f(U) = sum_j ||U^*A_jU - a_j I_k||_F^2 for a
/// given a. Free-target mode replaces a_j by a_j(U) = tr(U^*A_jU)/k, optionally
/// pulling a(U) toward an anchor with a quadratic penalty, and then polishes
/// without the penalty. Steps are projected onto the tangent space, retracted
/// by thin QR and accepted by Armijo backtracking.
///
/// Restarts run in blocks of `block` (fanned over `workers` threads). After
/// each block the search stops if some restart succeeded. The best result is
/// the lowest residual, ties going to the lowest restart index, so the outcome
/// does not depend on `workers`.
struct MembershipOptions {
  int restarts = 50;
  int max_iters = 500;
  /// Success iff the certificate residual is <= tol.
  double tol = 1e-10;
  double grad_tol = 1e-12;
  double armijo = 1e-4;
  double shrink = 0.5;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  int block = 8;
  /// Levenberg-Marquardt iterations after the descent; 0 disables.
  int polish_iters = 60;
};

struct MembershipResult {
  bool found = false;
  /// Lowest-residual candidate; a valid certificate only when `found`.
  RangeCertificate best;
  int restart = -1;
  int iterations = 0;

  double best_residual() const noexcept { return best.residual; }
};

MembershipResult membership_solve(const HermitianTuple& a, std::span<const double> target,
                                  std::size_t k, const MembershipOptions& options = {});

struct FreeTarget {
  std::optional<RealVector> anchor;
  double weight = 10.0;
};

MembershipResult membership_solve_free(const HermitianTuple& a, std::size_t k,
                                       const FreeTarget& free = {},
                                       const MembershipOptions& options = {});

}  // namespace rankrange

#endif  // RANKRANGE_MEMBERSHIP_HPP_
