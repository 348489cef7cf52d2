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

#ifndef RANKRANGE_RANK_RANGE_HPP_
#define RANKRANGE_RANK_RANGE_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rankrange/isometry.hpp"
#include "rankrange/matrix.hpp"

namespace rankrange {

/// A point a of the joint rank-k range together with the isometry U that
/// witnesses it. `residual` is sqrt(sum_j ||U^*A_jU - a_j I_k||_F^2) for the
/// tuple the certificate was issued against.
struct RangeCertificate {
  RealVector point;
  Isometry witness;
  double residual = 0.0;

  std::size_t k() const noexcept { return witness.k(); }
};

struct Verification {
  bool accepted = false;
  RangeCertificate certificate;
};

/// sqrt(sum_j ||U^*A_jU - a_j I||_F^2) at a given point.
double residual_at(const HermitianTuple& a, const Isometry& u, std::span<const double> point);

/// a_j = tr(U^*A_jU)/k; accepted iff the residual at that point is <= tol.
Verification verify_point(const HermitianTuple& a, const Isometry& u, double tol);

/// Real m x p matrix T with optional offset mu (length p); maps a -> aT - mu
/// and (A_1..A_m) -> (sum_i t_ij A_i - mu_j I)_j.
class RealTransform {
 public:
  RealTransform(std::size_t rows, std::size_t cols, std::vector<double> entries,
                RealVector offset = {});
  static RealTransform identity(std::size_t m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  const RealVector& offset() const noexcept { return offset_; }

  RealVector apply(std::span<const double> a) const;
  double frobenius_norm() const;
  /// Sum of |t_ij|; bounds the operator norm.
  double l1_norm() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
  RealVector offset_;
};

HermitianTuple transform_tuple(const HermitianTuple& a, const RealTransform& t);
/// Certificate (a, U) for A becomes (aT - mu, U) for `b = transform_tuple(A, T)`;
/// the residual is recomputed against `b`.
RangeCertificate transport_certificate(const HermitianTuple& b, const RangeCertificate& cert,
                                       const RealTransform& t);

/// (A_j - mu_j I)_j
HermitianTuple translate_tuple(const HermitianTuple& a, std::span<const double> mu);
/// Same witness and residual, point a - mu.
RangeCertificate translate_certificate(const RangeCertificate& cert, std::span<const double> mu);

/// Rank k+1 -> rank k by dropping the last witness column; keeps the point.
RangeCertificate shrink_rank(const HermitianTuple& a, const RangeCertificate& cert);

/// Certificate for (A_1..A_m) -> certificate for (A_1..A_{m-1}).
RangeCertificate drop_coordinate(const HermitianTuple& a, const RangeCertificate& cert);

/// Closed interval [lower, upper] = Lambda_k(A) of a single Hermitian matrix,
/// with constructive witnesses for both endpoints and the midpoint.
struct SingleInterval {
  double lower = 0.0;
  double upper = 0.0;
  Isometry lower_witness;
  Isometry upper_witness;
  Isometry mid_witness;
};

/// Empty (nullopt) when the k-th smallest eigenvalue exceeds the k-th largest,
/// i.e. when n < 2k - 1. Throws DimensionError for k > n.
std::optional<SingleInterval> single_matrix_interval(const HermitianMatrix& a, std::size_t k);

/// Witness for `value` in [lambda_k, lambda_{n-k+1}] built by rotating
/// eigenvector pairs. Throws DomainError outside the interval.
Isometry single_matrix_witness(const HermitianMatrix& a, std::size_t k, double value);

/// Maximal real-linearly independent subfamily B of A (greedy, in order) and
/// T with A_j = sum_i t_ij B_i.
struct Reduction {
  HermitianTuple independent;
  RealTransform transform;
  std::vector<std::size_t> selected;
};

/// Independence is decided against the real inner product Re tr(X^*Y): a
/// member is dependent when its residual after projecting onto the members
/// already selected is <= tol * (largest member norm).
Reduction reduce_tuple(const HermitianTuple& a, double tol = 1e-8);

/// Given a rank-k certificate for A and an isometry X onto an (n - r)-dim
/// subspace (1 <= r < k), builds a rank-(k - r) certificate for X^*AX at the
/// same point from range(U) ∩ range(X).
RangeCertificate compression_inclusion_check(const HermitianTuple& a, const RangeCertificate& cert,
                                             const Isometry& x);

}  // namespace rankrange

#endif  // RANKRANGE_RANK_RANGE_HPP_
