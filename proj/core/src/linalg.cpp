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

#include "rankrange/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "rankrange/error.hpp"

namespace rankrange {

// --- Isometry --------------------------------------------------------------

double isometry_defect(const ComplexMatrix& u) {
  ComplexMatrix g = adjoint_times(u, u);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return g.frobenius_norm();
}

Isometry::Isometry(ComplexMatrix u, double tolerance) : u_(std::move(u)) {
  if (u_.cols() > u_.rows()) throw DimensionError("Isometry: more columns than rows");
  if (!u_.all_finite()) throw DomainError("Isometry: non-finite entry");
  const double d = isometry_defect(u_);
  if (!(d <= tolerance)) {
    std::ostringstream os;
    os << "Isometry: ||U*U - I||_F = " << d << " exceeds " << tolerance;
    throw PreconditionError(os.str(), d);
  }
}

double Isometry::defect() const { return isometry_defect(u_); }

ComplexMatrix Isometry::projection() const { return u_ * u_.adjoint(); }

// --- Eigensolver -----------------------------------------------------------

namespace {

double max_off_diagonal(const ComplexMatrix& m) {
  double off = 0.0;
  for (std::size_t p = 0; p < m.rows(); ++p) {
    for (std::size_t q = p + 1; q < m.cols(); ++q) off = std::max(off, std::abs(m(p, q)));
  }
  return off;
}

void rotate(ComplexMatrix& m, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = m(p, q);
  const double mag = std::abs(apq);
  const Complex d = std::conj(apq) / mag;  // makes the (p,q) entry real
  const double app = m(p, p).real();
  const double aqq = m(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = m.rows();

  for (std::size_t i = 0; i < n; ++i) {
    const Complex mip = m(i, p);
    const Complex miq = m(i, q);
    m(i, p) = c * mip - s * d * miq;
    m(i, q) = s * mip + c * d * miq;
    const Complex vip = v(i, p);
    const Complex viq = v(i, q);
    v(i, p) = c * vip - s * d * viq;
    v(i, q) = s * vip + c * d * viq;
  }
  const Complex dc = std::conj(d);
  for (std::size_t j = 0; j < n; ++j) {
    const Complex mpj = m(p, j);
    const Complex mqj = m(q, j);
    m(p, j) = c * mpj - s * dc * mqj;
    m(q, j) = s * mpj + c * dc * mqj;
  }
  m(p, q) = 0.0;
  m(q, p) = 0.0;
  m(p, p) = m(p, p).real();
  m(q, q) = m(q, q).real();
}

void fix_phase(ComplexMatrix& v, std::size_t j) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double mag = std::abs(v(i, j));
    if (mag > best_mag) {
      best_mag = mag;
      best = i;
    }
  }
  if (best_mag <= 0.0) return;
  const Complex phase = std::conj(v(best, j)) / best_mag;
  for (std::size_t i = 0; i < v.rows(); ++i) v(i, j) *= phase;
  v(best, j) = v(best, j).real();
}

}  // namespace

EigenDecomposition herm_eig(const HermitianMatrix& a, const EigenOptions& options) {
  const std::size_t n = a.dim();
  ComplexMatrix m = a.matrix();
  ComplexMatrix v = ComplexMatrix::identity(n);
  const double threshold = options.tolerance * std::max(1.0, a.frobenius_norm());

  bool converged = max_off_diagonal(m) <= threshold;
  for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(m(p, q)) > 1e-3 * threshold) rotate(m, v, p, q);
      }
    }
    converged = max_off_diagonal(m) <= threshold;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return m(x, x).real() < m(y, y).real();
  });

  EigenDecomposition out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = m(order[j], order[j]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    fix_phase(out.vectors, j);
  }

  if (!converged) {
    ComplexMatrix r = a.matrix() * out.vectors;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) r(i, j) -= out.vectors(i, j) * out.values[j];
    }
    throw NumericalFailure("herm_eig: Jacobi sweeps did not converge", r.frobenius_norm());
  }
  return out;
}

double kth_largest_eigenvalue(const HermitianMatrix& a, std::size_t k) {
  if (k == 0 || k > a.dim()) throw DimensionError("kth_largest_eigenvalue: k out of range");
  const auto eig = herm_eig(a);
  return eig.values[a.dim() - k];
}

// --- Orthonormalization ----------------------------------------------------

namespace {

void axpy(Complex alpha, std::span<const Complex> x, std::span<Complex> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

/// Projects `w` off every vector in `basis`; returns the largest |coefficient|.
double project_out(const std::vector<ComplexVector>& basis, ComplexVector& w) {
  double largest = 0.0;
  for (const auto& q : basis) {
    const Complex c = inner(q, w);
    axpy(-c, q, w);
    largest = std::max(largest, std::abs(c));
  }
  return largest;
}

std::vector<ComplexVector> orthonormal_columns(const ComplexMatrix& columns,
                                               double drop_tolerance) {
  std::vector<ComplexVector> basis;
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    ComplexVector w = columns.column(j);
    const double original = norm(w);
    if (project_out(basis, w) > 0.5 * original) project_out(basis, w);
    const double r = norm(w);
    if (r < drop_tolerance * std::max(1.0, original)) continue;
    for (auto& z : w) z /= r;
    basis.push_back(std::move(w));
  }
  return basis;
}

}  // namespace

ComplexMatrix orthonormalize(const ComplexMatrix& columns, double drop_tolerance) {
  return ComplexMatrix::from_columns(orthonormal_columns(columns, drop_tolerance),
                                     columns.rows());
}

ComplexMatrix orth_complement(const ComplexMatrix& s, const std::optional<ComplexMatrix>& within,
                              std::optional<std::size_t> count) {
  if (within) {
    // Vectors W c with S^* W c = 0, i.e. c in null(S^* W) = range(W^* S)^⊥.
    if (s.cols() > 0 && within->rows() != s.rows()) {
      throw DimensionError("orth_complement: `within` has the wrong row count");
    }
    if (within->cols() > 0 && isometry_defect(*within) > 1e-10) {
      throw PreconditionError("orth_complement: `within` columns are not orthonormal",
                              isometry_defect(*within));
    }
    ComplexMatrix coeffs = s.cols() == 0 ? ComplexMatrix(within->cols(), 0)
                                         : adjoint_times(*within, s);
    ComplexMatrix null_basis = orth_complement(coeffs, std::nullopt, count);
    return *within * null_basis;
  }

  const std::size_t n = s.rows();
  std::vector<ComplexVector> basis = orthonormal_columns(s, 1e-10);
  const std::size_t available = n - std::min(n, basis.size());
  if (count && *count > available) {
    std::ostringstream os;
    os << "orth_complement: requested " << *count << " directions but only " << available
       << " remain in dimension " << n;
    throw DimensionError(os.str());
  }
  const std::size_t wanted = count.value_or(available);

  // Greedy pivoting over the standard basis.
  std::vector<ComplexVector> residuals;
  residuals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexVector e(n);
    e[i] = 1.0;
    project_out(basis, e);
    project_out(basis, e);
    residuals.push_back(std::move(e));
  }
  std::vector<bool> used(n, false);
  std::vector<ComplexVector> out;
  while (out.size() < wanted) {
    std::size_t best = n;
    double best_norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      const double r = norm(residuals[i]);
      if (r > best_norm) {
        best_norm = r;
        best = i;
      }
    }
    if (best == n || best_norm < 1e-8) break;
    used[best] = true;
    ComplexVector q = residuals[best];
    project_out(basis, q);
    project_out(out, q);
    const double r = norm(q);
    for (auto& z : q) z /= r;
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      axpy(-inner(q, residuals[i]), q, residuals[i]);
    }
    out.push_back(std::move(q));
  }
  if (count && out.size() < *count) {
    std::ostringstream os;
    os << "orth_complement: only " << out.size() << " of " << *count
       << " directions found after rank decision";
    throw DimensionError(os.str());
  }
  return ComplexMatrix::from_columns(out, n);
}

ThinQr thin_qr(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  const std::size_t k = m.cols();
  ThinQr out{ComplexMatrix(n, k), ComplexMatrix(k, k)};
  std::vector<ComplexVector> q;
  q.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    ComplexVector v = m.column(j);
    const double original = norm(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < q.size(); ++i) {
        const Complex c = inner(q[i], v);
        axpy(-c, q[i], v);
        out.r(i, j) += c;
      }
    }
    const double r = norm(v);
    if (!(r > 1e-14 * std::max(1.0, original))) {
      throw DegeneracyError("thin_qr: matrix is column-rank deficient", j, k);
    }
    for (auto& z : v) z /= r;
    out.r(j, j) = r;
    out.q.set_column(j, v);
    q.push_back(std::move(v));
  }
  return out;
}

// --- Splitting and compression ---------------------------------------------

std::pair<HermitianMatrix, HermitianMatrix> hermitian_split(const ComplexMatrix& t) {
  if (!t.square()) throw DimensionError("hermitian_split: matrix is not square");
  const ComplexMatrix ta = t.adjoint();
  ComplexMatrix h1 = (t + ta) * Complex(0.5, 0.0);
  ComplexMatrix h2 = (t - ta) * Complex(0.0, -0.5);  // (T - T^*)/(2i)
  return {HermitianMatrix::symmetrized(h1), HermitianMatrix::symmetrized(h2)};
}

HermitianMatrix compress(const HermitianMatrix& a, const ComplexMatrix& u) {
  if (u.rows() != a.dim()) throw DimensionError("compress: isometry row count != n");
  return HermitianMatrix::symmetrized(adjoint_times(u, a.matrix() * u));
}

HermitianTuple compress(const HermitianTuple& a, const Isometry& u) {
  std::vector<HermitianMatrix> out;
  out.reserve(a.size());
  for (const auto& m : a) out.push_back(compress(m, u.matrix()));
  return HermitianTuple(std::move(out));
}

}  // namespace rankrange
