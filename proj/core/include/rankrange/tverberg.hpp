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

#ifndef RANKRANGE_TVERBERG_HPP_
#define RANKRANGE_TVERBERG_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rankrange/matrix.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange {

/// Partition searches beyond this many points are refused.
inline constexpr std::size_t kMaxTverbergPoints = 16;

/// (m + 1)(k - 1) + 1: points needed for a k-part partition in R^m.
std::size_t tverberg_point_count(std::size_t m, std::size_t k);

/// (k - 1)(m + 1)^2: dimension that guarantees a nonempty rank-k range.
std::size_t existence_dimension(std::size_t m, std::size_t k);

/// Orthonormal x_1..x_q with <A_j x_i, x_r> = 0 for all i != r, so every
/// X^*A_jX is diagonal with diagonal entries diag_points[i][j].
struct OrthogonalChain {
  ComplexMatrix vectors;  // n x q
  std::vector<RealVector> diag_points;

  std::size_t size() const noexcept { return vectors.cols(); }
};

/// x_1 is the lowest eigenvector of A_1; x_r spans the first direction of the
/// orthogonal complement of {x_i, A_j x_i : i < r}.
OrthogonalChain build_chain(const HermitianTuple& a, std::size_t q);

/// Disjoint parts R_1..R_k (0-based point indices) whose convex hulls share
/// `common_point`, with convex weights per part aligned with `parts`.
struct TverbergPartition {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::vector<double>> weights;
  RealVector common_point;
  /// max_j || sum_{i in R_j} t_i p_i - common_point ||_inf
  double residual = 0.0;
  std::size_t candidates_tested = 0;
};

/// Enumerates partitions of the points into exactly k nonempty parts as
/// restricted growth strings in lexicographic order and returns the first one
/// whose hulls intersect, decided by a feasibility LP per candidate.
TverbergPartition tverberg_partition(std::span<const RealVector> points, std::size_t k);

/// y_j = sum_{i in R_j} sqrt(t_i) x_i; verified against `a`.
RangeCertificate assemble_witness(const HermitianTuple& a, const OrthogonalChain& chain,
                                  const TverbergPartition& partition);

/// Constructive rank-k point for n >= (k - 1)(m + 1)^2. Throws BoundError below
/// the bound and ComplexityError when the partition search would exceed
/// kMaxTverbergPoints points.
RangeCertificate construct_point(const HermitianTuple& a, std::size_t k);

}  // namespace rankrange

#endif  // RANKRANGE_TVERBERG_HPP_
