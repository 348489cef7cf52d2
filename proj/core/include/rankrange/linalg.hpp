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

#ifndef RANKRANGE_LINALG_HPP_
#define RANKRANGE_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <utility>

#include "rankrange/isometry.hpp"
#include "rankrange/matrix.hpp"

namespace rankrange {

/// Spectral decomposition A = V diag(values) V^*. Values ascending; each
/// column of V has its largest-magnitude component real positive (ties go to
/// the lowest index).
struct EigenDecomposition {
  RealVector values;
  ComplexMatrix vectors;
};

struct EigenOptions {
  /// Sweeps stop once max |a_pq| <= tolerance * max(1, ||A||_F).
  double tolerance = 1e-13;
  int max_sweeps = 64;
};

/// Cyclic complex Jacobi. Throws NumericalFailure if the off-diagonal mass
/// has not reached the tolerance after `max_sweeps`.
EigenDecomposition herm_eig(const HermitianMatrix& a, const EigenOptions& options = {});

/// k-th largest eigenvalue (k is 1-based).
double kth_largest_eigenvalue(const HermitianMatrix& a, std::size_t k);

/// Modified Gram-Schmidt over the columns of `columns`, in order. A column is
/// re-orthogonalized once when some projection coefficient exceeds half its
/// norm, and dropped when the remaining norm is below
/// `drop_tolerance * max(1, original norm)`.
ComplexMatrix orthonormalize(const ComplexMatrix& columns, double drop_tolerance = 1e-10);

/// Orthonormal basis of span(within) ∩ span(s)^⊥ (span(within) defaults to
/// C^n). Candidate directions are taken greedily by largest residual, ties to
/// the lowest index, so the result is deterministic. With `count` set, exactly
/// that many columns are returned or DimensionError is thrown.
ComplexMatrix orth_complement(const ComplexMatrix& s,
                              const std::optional<ComplexMatrix>& within = std::nullopt,
                              std::optional<std::size_t> count = std::nullopt);

struct ThinQr {
  ComplexMatrix q;  // n x k, orthonormal columns
  ComplexMatrix r;  // k x k, upper triangular with positive real diagonal
};

/// Requires full column rank (throws DegeneracyError otherwise).
ThinQr thin_qr(const ComplexMatrix& m);

/// T = H1 + i H2 with H1 = (T + T^*)/2, H2 = (T - T^*)/(2i).
std::pair<HermitianMatrix, HermitianMatrix> hermitian_split(const ComplexMatrix& t);

/// U^* A U, symmetrized.
HermitianMatrix compress(const HermitianMatrix& a, const ComplexMatrix& u);
/// (U^*A_1U, ..., U^*A_mU)
HermitianTuple compress(const HermitianTuple& a, const Isometry& u);

}  // namespace rankrange

#endif  // RANKRANGE_LINALG_HPP_
