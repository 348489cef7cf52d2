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

#ifndef RANKRANGE_GEOMETRY_HPP_
#define RANKRANGE_GEOMETRY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rankrange/isometry.hpp"
#include "rankrange/matrix.hpp"
#include "rankrange/membership.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange {

struct Halfspace {
  RealVector c;  // unit direction
  double bound = 0.0;  // k-th largest eigenvalue of c . A
};

/// Outer approximation {a : c . a <= bound for every entry} of the rank-k range.
struct HalfspaceSet {
  std::size_t k = 1;
  std::vector<Halfspace> entries;
};

/// The 2m signed axis directions come first, followed by `directions` seeded
/// Gaussian unit directions.
HalfspaceSet outer_halfspaces(const HermitianTuple& a, std::size_t k, std::size_t directions = 512,
                              std::uint64_t seed = 0, unsigned workers = 1);

/// Bounds for the same (A, directions) at another rank.
HalfspaceSet rebound(const HermitianTuple& a, const HalfspaceSet& h, std::size_t k);

struct SlackReport {
  double min_slack = 0.0;
  std::size_t argmin = 0;

  bool consistent(double tol = 1e-8) const noexcept { return min_slack >= -tol; }
};

/// min over entries of bound - c . a.
SlackReport check_against_halfspaces(const HalfspaceSet& h, std::span<const double> point);

/// A_j = B_j (x) I_k with B_1 = diag(1, -1), B_2 = [[0, 1], [1, 0]] and
/// B_3 = [[0, i], [-i, 0]]; its rank-k range is the unit sphere in R^3.
struct SphereFamily {
  std::size_t k = 1;
  HermitianTuple tuple;

  /// U = [alpha I; beta I]. Throws DomainError unless ||a|| = 1 within 1e-9.
  Isometry witness(std::span<const double> a) const;
};

SphereFamily sphere_family(std::size_t k);

struct SampleOptions {
  /// Restarts per sample.
  int restarts = 4;
  double accept = 1e-8;
  unsigned workers = 1;
};

/// Free-target membership runs anchored at <Ax, x> for seeded random unit x.
/// Only certificates with residual <= options.accept are returned, in sample
/// order.
std::vector<RangeCertificate> sample_inner(const HermitianTuple& a, std::size_t k,
                                           std::size_t samples, std::uint64_t seed,
                                           const SampleOptions& options = {});

}  // namespace rankrange

#endif  // RANKRANGE_GEOMETRY_HPP_
