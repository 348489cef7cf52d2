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

#ifndef RANKRANGE_CHANNEL_HPP_
#define RANKRANGE_CHANNEL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "rankrange/matrix.hpp"

namespace rankrange {

/// Phi(X) = sum_j T_j X T_j^* given by square Kraus operators T_1..T_r.
class KrausChannel {
 public:
  static constexpr double kTraceTolerance = 1e-10;

  /// Checked: throws PreconditionError unless ||sum T_j^*T_j - I||_F <= 1e-10.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus);
  /// Any set of equally sized square operators, trace-preserving or not.
  static KrausChannel unchecked(std::vector<ComplexMatrix> kraus);

  std::size_t r() const noexcept { return kraus_.size(); }
  std::size_t n() const noexcept { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const ComplexMatrix& operator[](std::size_t j) const { return kraus_[j]; }

  /// Drops operators with ||T||_F <= threshold; keeps at least one.
  KrausChannel without_negligible(double threshold = 1e-14) const;

 private:
  struct Unchecked {};
  KrausChannel(std::vector<ComplexMatrix> kraus, Unchecked);
  std::vector<ComplexMatrix> kraus_;
};

struct TraceReport {
  bool ok = false;
  double residual = 0.0;  // ||sum T_j^*T_j - I||_F
};

TraceReport validate_kraus(const KrausChannel& ch, double tol = KrausChannel::kTraceTolerance);

ComplexMatrix apply_channel(const KrausChannel& ch, const ComplexMatrix& x);

enum class ProductPart { kDiag, kHerm, kSkew };

/// Which product T_i^*T_j (0-based i <= j) a KL-tuple member encodes.
struct ProductLabel {
  std::size_t i = 0;
  std::size_t j = 0;
  ProductPart part = ProductPart::kDiag;

  friend bool operator==(const ProductLabel&, const ProductLabel&) = default;
};

std::string to_string(ProductPart part);

/// Hermitian family whose joint rank-k range decides existence of a k-dim
/// code: T_i^*T_i for each i, and the Hermitian and skew parts of T_i^*T_j for
/// i < j, in row-major (i, j) order. r^2 members in total.
struct KLTuple {
  HermitianTuple base;
  std::vector<ProductLabel> labels;
};

KLTuple kl_tuple(const KrausChannel& ch);

}  // namespace rankrange

#endif  // RANKRANGE_CHANNEL_HPP_
