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

#ifndef RANKRANGE_STAR_HPP_
#define RANKRANGE_STAR_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankrange/matrix.hpp"
#include "rankrange/rank_range.hpp"

namespace rankrange {

enum class StarCase {
  kRankK,
  /// Rank one, first-row vectors of the bordered compression span less than R^m.
  kDependent,
  /// Rank one, first-row vectors span R^m.
  kIndependent,
  /// Rank one, x already lies in the range of the center witness.
  kInRange,
};

std::string to_string(StarCase c);

struct StarSample {
  double t = 0.0;
  /// Certificate for the original tuple at center + t (tip - center).
  RangeCertificate cert;
};

struct StarSegment {
  RangeCertificate center;
  RangeCertificate tip;
  std::vector<StarSample> samples;
  StarCase star_case = StarCase::kRankK;
  /// Real rank of the first-row vectors (rank-one segments only).
  std::size_t first_row_rank = 0;
};

/// 0, 1/(count-1), ..., 1.
std::vector<double> equally_spaced(std::size_t count);

/// Segment from a rank-k_hat center (k_hat >= (m + 2)k) to a rank-k tip. The
/// sample witness has columns sqrt(t) x_i + sqrt(1 - t) y_i with y_1..y_k
/// orthonormal in range(Y) ∩ (range(X) + sum_j A'_j range(X))^⊥, where A' is
/// the tuple translated to the center. Throws DegeneracyError when that
/// intersection is numerically too small and NumericalFailure when a sample
/// fails verification at 1e-8.
StarSegment star_segment_rank_k(const HermitianTuple& a, const RangeCertificate& center,
                                const RangeCertificate& tip, std::span<const double> ts);

/// Segment from a rank-k_hat center (2 k_hat > m + 1) to the rank-one point
/// <Ax, x> of a unit vector x, built inside span(range(center witness), x).
StarSegment star_segment_rank_1(const HermitianTuple& a, const RangeCertificate& center,
                                std::span<const Complex> x, std::span<const double> ts);

}  // namespace rankrange

#endif  // RANKRANGE_STAR_HPP_
