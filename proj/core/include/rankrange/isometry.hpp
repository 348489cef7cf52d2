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

#ifndef RANKRANGE_ISOMETRY_HPP_
#define RANKRANGE_ISOMETRY_HPP_

#include <cstddef>

#include "rankrange/matrix.hpp"

namespace rankrange {

/// n x k matrix U with U^*U = I_k. The range of U is the subspace a
/// certificate or code lives on; UU^* is the corresponding projection.
class Isometry {
 public:
  static constexpr double kDefaultTolerance = 1e-10;

  Isometry() = default;
  /// Throws PreconditionError carrying ||U^*U - I||_F when above `tolerance`.
  explicit Isometry(ComplexMatrix u, double tolerance = kDefaultTolerance);

  std::size_t n() const noexcept { return u_.rows(); }
  std::size_t k() const noexcept { return u_.cols(); }
  const ComplexMatrix& matrix() const noexcept { return u_; }
  ComplexVector column(std::size_t j) const { return u_.column(j); }

  /// ||U^*U - I||_F
  double defect() const;
  /// UU^*
  ComplexMatrix projection() const;

 private:
  ComplexMatrix u_;
};

double isometry_defect(const ComplexMatrix& u);

}  // namespace rankrange

#endif  // RANKRANGE_ISOMETRY_HPP_
