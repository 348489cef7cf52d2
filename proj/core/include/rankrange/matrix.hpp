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

#ifndef RANKRANGE_MATRIX_HPP_
#define RANKRANGE_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace rankrange {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;
using RealVector = std::vector<double>;

/// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static ComplexMatrix from_columns(const std::vector<ComplexVector>& columns, std::size_t rows);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return entries_.empty(); }
  bool square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, std::span<const Complex> values);
  /// Columns [first, first + count).
  ComplexMatrix columns(std::size_t first, std::size_t count) const;
  /// Rows [first, first + count).
  ComplexMatrix row_block(std::size_t first, std::size_t count) const;

  ComplexMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale);
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexVector operator*(const ComplexMatrix& lhs, std::span<const Complex> rhs);

/// lhs^* rhs without forming the adjoint.
ComplexMatrix adjoint_times(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
/// [lhs | rhs]
ComplexMatrix hcat(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
/// lhs (x) rhs
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// <x, y> = sum conj(x_i) y_i
Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);

/// Hermitian matrix stored symmetrized as (M + M^*)/2.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;
  /// Checked: `m` must be square, finite and Hermitian to 1e-12 entrywise.
  explicit HermitianMatrix(ComplexMatrix m);

  /// Symmetrizes without checking; for matrices Hermitian by construction.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);
  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return matrix_(i, j); }

  /// Real trace.
  double trace() const { return matrix_.trace().real(); }
  double frobenius_norm() const { return matrix_.frobenius_norm(); }

  /// <M x, x>, real for Hermitian M.
  double quadratic_form(std::span<const Complex> x) const;

  HermitianMatrix& operator+=(const HermitianMatrix& other);
  HermitianMatrix& operator-=(const HermitianMatrix& other);
  HermitianMatrix& operator*=(double scale);

 private:
  struct Unchecked {};
  HermitianMatrix(ComplexMatrix m, Unchecked);
  ComplexMatrix matrix_;
};

HermitianMatrix operator+(HermitianMatrix lhs, const HermitianMatrix& rhs);
HermitianMatrix operator-(HermitianMatrix lhs, const HermitianMatrix& rhs);
HermitianMatrix operator*(double scale, HermitianMatrix rhs);

/// Real inner product Re tr(X^* Y) on Hermitian matrices.
double real_inner(const HermitianMatrix& x, const HermitianMatrix& y);

/// A = (A_1, ..., A_m), all of common dimension n, m >= 1.
class HermitianTuple {
 public:
  explicit HermitianTuple(std::vector<HermitianMatrix> matrices);

  std::size_t size() const noexcept { return matrices_.size(); }
  std::size_t dim() const noexcept { return matrices_.front().dim(); }
  const HermitianMatrix& operator[](std::size_t j) const { return matrices_[j]; }
  const std::vector<HermitianMatrix>& matrices() const noexcept { return matrices_; }

  auto begin() const noexcept { return matrices_.begin(); }
  auto end() const noexcept { return matrices_.end(); }

  /// (<A_1 x, x>, ..., <A_m x, x>)
  RealVector quadratic_point(std::span<const Complex> x) const;
  /// sum_j c_j A_j
  HermitianMatrix combination(std::span<const double> c) const;

 private:
  std::vector<HermitianMatrix> matrices_;
};

}  // namespace rankrange

#endif  // RANKRANGE_MATRIX_HPP_
