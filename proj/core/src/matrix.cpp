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

#include "rankrange/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rankrange/error.hpp"

namespace rankrange {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    std::ostringstream os;
    os << op << ": shape mismatch " << a.rows() << "x" << a.cols() << " vs " << b.rows() << "x"
       << b.cols();
    throw DimensionError(os.str());
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("ComplexMatrix: entry count does not match rows x cols");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<Complex> entries;
  entries.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return ComplexMatrix(r, c, std::move(entries));
}

ComplexMatrix ComplexMatrix::from_columns(const std::vector<ComplexVector>& columns,
                                          std::size_t rows) {
  ComplexMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

void ComplexMatrix::set_column(std::size_t j, std::span<const Complex> values) {
  if (values.size() != rows_ || j >= cols_) throw DimensionError("set_column: bad shape");
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
}

ComplexMatrix ComplexMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionError("columns: range out of bounds");
  ComplexMatrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  }
  return out;
}

ComplexMatrix ComplexMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionError("row_block: range out of bounds");
  ComplexMatrix out(count, cols_);
  std::copy(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_),
            out.entries_.begin());
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DimensionError("operator*: inner dimensions differ");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t l = 0; l < lhs.cols(); ++l) {
      const Complex a = lhs(i, l);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(l, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& lhs, std::span<const Complex> rhs) {
  if (lhs.cols() != rhs.size()) throw DimensionError("matrix-vector: dimension mismatch");
  ComplexVector out(lhs.rows());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < lhs.cols(); ++j) s += lhs(i, j) * rhs[j];
    out[i] = s;
  }
  return out;
}

ComplexMatrix adjoint_times(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.rows() != rhs.rows()) throw DimensionError("adjoint_times: row counts differ");
  ComplexMatrix out(lhs.cols(), rhs.cols());
  for (std::size_t l = 0; l < lhs.rows(); ++l) {
    for (std::size_t i = 0; i < lhs.cols(); ++i) {
      const Complex a = std::conj(lhs(l, i));
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(l, j);
    }
  }
  return out;
}

ComplexMatrix hcat(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.empty()) return rhs;
  if (rhs.empty()) return lhs;
  if (lhs.rows() != rhs.rows()) throw DimensionError("hcat: row counts differ");
  ComplexMatrix out(lhs.rows(), lhs.cols() + rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) = lhs(i, j);
    for (std::size_t j = 0; j < rhs.cols(); ++j) out(i, lhs.cols() + j) = rhs(i, j);
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  ComplexMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      const Complex a = lhs(i, j);
      for (std::size_t p = 0; p < rhs.rows(); ++p) {
        for (std::size_t q = 0; q < rhs.cols(); ++q) {
          out(i * rhs.rows() + p, j * rhs.cols() + q) = a * rhs(p, q);
        }
      }
    }
  }
  return out;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DimensionError("inner: length mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

double norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

// --- HermitianMatrix -------------------------------------------------------

HermitianMatrix::HermitianMatrix(ComplexMatrix m) {
  if (!m.square()) throw DimensionError("HermitianMatrix: matrix is not square");
  if (!m.all_finite()) throw DomainError("HermitianMatrix: non-finite entry");
  double asym = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.cols(); ++j) {
      asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  if (asym > 1e-12) {
    throw PreconditionError("HermitianMatrix: |M - M*|_max exceeds 1e-12", asym);
  }
  *this = symmetrized(m);
}

HermitianMatrix::HermitianMatrix(ComplexMatrix m, Unchecked) : matrix_(std::move(m)) {}

HermitianMatrix HermitianMatrix::symmetrized(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("HermitianMatrix: matrix is not square");
  ComplexMatrix s(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s(i, i) = m(i, i).real();
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
      s(i, j) = v;
      s(j, i) = std::conj(v);
    }
  }
  return HermitianMatrix(std::move(s), Unchecked{});
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  return HermitianMatrix(ComplexMatrix(n, n), Unchecked{});
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  return HermitianMatrix(ComplexMatrix::identity(n), Unchecked{});
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> values) {
  return HermitianMatrix(ComplexMatrix::diagonal(values), Unchecked{});
}

double HermitianMatrix::quadratic_form(std::span<const Complex> x) const {
  if (x.size() != dim()) throw DimensionError("quadratic_form: dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) {
    Complex row = 0.0;
    for (std::size_t j = 0; j < dim(); ++j) row += matrix_(i, j) * x[j];
    s += (std::conj(x[i]) * row).real();
  }
  return s;
}

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
  matrix_ += other.matrix_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
  matrix_ -= other.matrix_;
  return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double scale) {
  matrix_ *= scale;
  return *this;
}

HermitianMatrix operator+(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs += rhs; }
HermitianMatrix operator-(HermitianMatrix lhs, const HermitianMatrix& rhs) { return lhs -= rhs; }
HermitianMatrix operator*(double scale, HermitianMatrix rhs) { return rhs *= scale; }

double real_inner(const HermitianMatrix& x, const HermitianMatrix& y) {
  if (x.dim() != y.dim()) throw DimensionError("real_inner: dimension mismatch");
  // Re tr(X^* Y) = Re sum_ij conj(X_ij) Y_ij
  double s = 0.0;
  const auto xe = x.matrix().entries();
  const auto ye = y.matrix().entries();
  for (std::size_t i = 0; i < xe.size(); ++i) s += (std::conj(xe[i]) * ye[i]).real();
  return s;
}

// --- HermitianTuple --------------------------------------------------------

HermitianTuple::HermitianTuple(std::vector<HermitianMatrix> matrices)
    : matrices_(std::move(matrices)) {
  if (matrices_.empty()) throw DimensionError("HermitianTuple: needs at least one matrix");
  const std::size_t n = matrices_.front().dim();
  for (const auto& m : matrices_) {
    if (m.dim() != n) throw DimensionError("HermitianTuple: members differ in dimension");
  }
}

RealVector HermitianTuple::quadratic_point(std::span<const Complex> x) const {
  RealVector p;
  p.reserve(size());
  for (const auto& m : matrices_) p.push_back(m.quadratic_form(x));
  return p;
}

HermitianMatrix HermitianTuple::combination(std::span<const double> c) const {
  if (c.size() != size()) throw DimensionError("combination: coefficient count != m");
  HermitianMatrix out = HermitianMatrix::zero(dim());
  for (std::size_t j = 0; j < size(); ++j) {
    if (c[j] != 0.0) out += c[j] * matrices_[j];
  }
  return out;
}

}  // namespace rankrange
