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

#include "rankrange/rank_range.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"

namespace rankrange {

namespace {

void require_rows(const HermitianTuple& a, const Isometry& u, const char* op) {
  if (u.n() != a.dim()) {
    std::ostringstream os;
    os << op << ": witness has " << u.n() << " rows but the tuple acts on C^" << a.dim();
    throw DimensionError(os.str());
  }
}

}  // namespace

double residual_at(const HermitianTuple& a, const Isometry& u, std::span<const double> point) {
  require_rows(a, u, "residual_at");
  if (point.size() != a.size()) throw DimensionError("residual_at: point length != m");
  double total = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    HermitianMatrix c = compress(a[j], u.matrix());
    double s = 0.0;
    for (std::size_t p = 0; p < c.dim(); ++p) {
      for (std::size_t q = 0; q < c.dim(); ++q) {
        const Complex e = p == q ? c(p, q) - point[j] : c(p, q);
        s += std::norm(e);
      }
    }
    total += s;
  }
  return std::sqrt(total);
}

Verification verify_point(const HermitianTuple& a, const Isometry& u, double tol) {
  require_rows(a, u, "verify_point");
  if (u.k() == 0) throw DimensionError("verify_point: witness has no columns");
  const double k = static_cast<double>(u.k());
  RealVector point(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    point[j] = compress(a[j], u.matrix()).trace() / k;
  }
  const double residual = residual_at(a, u, point);
  return {residual <= tol, RangeCertificate{std::move(point), u, residual}};
}

// --- RealTransform ---------------------------------------------------------

RealTransform::RealTransform(std::size_t rows, std::size_t cols, std::vector<double> entries,
                             RealVector offset)
    : rows_(rows), cols_(cols), entries_(std::move(entries)), offset_(std::move(offset)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("RealTransform: entry count does not match rows x cols");
  }
  if (!offset_.empty() && offset_.size() != cols_) {
    throw DimensionError("RealTransform: offset length must equal the column count");
  }
  for (double v : entries_) {
    if (!std::isfinite(v)) throw DomainError("RealTransform: non-finite entry");
  }
  for (double v : offset_) {
    if (!std::isfinite(v)) throw DomainError("RealTransform: non-finite offset");
  }
}

RealTransform RealTransform::identity(std::size_t m) {
  std::vector<double> e(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) e[i * m + i] = 1.0;
  return RealTransform(m, m, std::move(e));
}

RealVector RealTransform::apply(std::span<const double> a) const {
  if (a.size() != rows_) throw DimensionError("RealTransform::apply: length != rows");
  RealVector out(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] += a[i] * (*this)(i, j);
  }
  if (!offset_.empty()) {
    for (std::size_t j = 0; j < cols_; ++j) out[j] -= offset_[j];
  }
  return out;
}

double RealTransform::frobenius_norm() const {
  double s = 0.0;
  for (double v : entries_) s += v * v;
  return std::sqrt(s);
}

double RealTransform::l1_norm() const {
  double s = 0.0;
  for (double v : entries_) s += std::abs(v);
  return s;
}

HermitianTuple transform_tuple(const HermitianTuple& a, const RealTransform& t) {
  if (t.rows() != a.size()) throw DimensionError("transform_tuple: T must have m rows");
  if (t.cols() == 0) throw DimensionError("transform_tuple: T has no columns");
  std::vector<HermitianMatrix> out;
  out.reserve(t.cols());
  RealVector coeff(a.size());
  for (std::size_t j = 0; j < t.cols(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) coeff[i] = t(i, j);
    HermitianMatrix b = a.combination(coeff);
    if (!t.offset().empty() && t.offset()[j] != 0.0) {
      b -= t.offset()[j] * HermitianMatrix::identity(a.dim());
    }
    out.push_back(std::move(b));
  }
  return HermitianTuple(std::move(out));
}

RangeCertificate transport_certificate(const HermitianTuple& b, const RangeCertificate& cert,
                                       const RealTransform& t) {
  RealVector point = t.apply(cert.point);
  const double residual = residual_at(b, cert.witness, point);
  return {std::move(point), cert.witness, residual};
}

HermitianTuple translate_tuple(const HermitianTuple& a, std::span<const double> mu) {
  if (mu.size() != a.size()) throw DimensionError("translate_tuple: mu length != m");
  std::vector<HermitianMatrix> out;
  out.reserve(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    out.push_back(a[j] - mu[j] * HermitianMatrix::identity(a.dim()));
  }
  return HermitianTuple(std::move(out));
}

RangeCertificate translate_certificate(const RangeCertificate& cert, std::span<const double> mu) {
  if (mu.size() != cert.point.size()) {
    throw DimensionError("translate_certificate: mu length != m");
  }
  RangeCertificate out = cert;
  for (std::size_t j = 0; j < mu.size(); ++j) out.point[j] -= mu[j];
  return out;
}

RangeCertificate shrink_rank(const HermitianTuple& a, const RangeCertificate& cert) {
  if (cert.k() < 2) throw DimensionError("shrink_rank: certificate already has rank 1");
  Isometry smaller(cert.witness.matrix().columns(0, cert.k() - 1));
  const double residual = residual_at(a, smaller, cert.point);
  return {cert.point, std::move(smaller), residual};
}

RangeCertificate drop_coordinate(const HermitianTuple& a, const RangeCertificate& cert) {
  if (a.size() < 2) throw DimensionError("drop_coordinate: tuple has a single member");
  if (cert.point.size() != a.size()) throw DimensionError("drop_coordinate: point length != m");
  std::vector<HermitianMatrix> head(a.matrices().begin(), a.matrices().end() - 1);
  HermitianTuple shorter(std::move(head));
  RealVector point(cert.point.begin(), cert.point.end() - 1);
  const double residual = residual_at(shorter, cert.witness, point);
  return {std::move(point), cert.witness, residual};
}

// --- Single matrix ---------------------------------------------------------

namespace {

Isometry witness_from_eig(const EigenDecomposition& eig, std::size_t k, double value) {
  const std::size_t n = eig.values.size();
  double scale = 1.0;
  for (double v : eig.values) scale = std::max(scale, std::abs(v));
  const double eps = 1e-12 * scale;

  std::vector<std::size_t> equal, low, high;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(eig.values[i] - value) <= eps) {
      equal.push_back(i);
    } else if (eig.values[i] < value) {
      low.push_back(i);
    } else {
      high.push_back(i);
    }
  }
  // low ascending, high ascending; pair low[j] with the matching high so that
  // every pair straddles the value.
  std::vector<ComplexVector> cols;
  for (std::size_t i : equal) {
    if (cols.size() == k) break;
    cols.push_back(eig.vectors.column(i));
  }
  const std::size_t pairs = std::min(low.size(), high.size());
  for (std::size_t j = 0; j < pairs && cols.size() < k; ++j) {
    const std::size_t lo = low[j];
    const std::size_t hi = high[high.size() - pairs + j];
    const double lam_lo = eig.values[lo];
    const double lam_hi = eig.values[hi];
    const double c2 = (lam_hi - value) / (lam_hi - lam_lo);
    const double c = std::sqrt(std::clamp(c2, 0.0, 1.0));
    const double s = std::sqrt(std::clamp(1.0 - c2, 0.0, 1.0));
    ComplexVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = c * eig.vectors(i, lo) + s * eig.vectors(i, hi);
    cols.push_back(std::move(u));
  }
  if (cols.size() < k) {
    std::ostringstream os;
    os << "single_matrix_witness: value " << value << " is outside the rank-" << k
       << " interval";
    throw DomainError(os.str());
  }
  return Isometry(ComplexMatrix::from_columns(cols, n));
}

}  // namespace

std::optional<SingleInterval> single_matrix_interval(const HermitianMatrix& a, std::size_t k) {
  const std::size_t n = a.dim();
  if (k == 0 || k > n) throw DimensionError("single_matrix_interval: need 1 <= k <= n");
  const auto eig = herm_eig(a);
  const double lower = eig.values[k - 1];
  const double upper = eig.values[n - k];
  if (lower > upper) return std::nullopt;
  const double mid = 0.5 * (lower + upper);
  return SingleInterval{lower, upper, witness_from_eig(eig, k, lower),
                        witness_from_eig(eig, k, upper), witness_from_eig(eig, k, mid)};
}

Isometry single_matrix_witness(const HermitianMatrix& a, std::size_t k, double value) {
  if (k == 0 || k > a.dim()) throw DimensionError("single_matrix_witness: need 1 <= k <= n");
  return witness_from_eig(herm_eig(a), k, value);
}

// --- Reduction -------------------------------------------------------------

namespace {

/// Solves G x = b for symmetric positive definite G by Cholesky.
RealVector cholesky_solve(const std::vector<double>& g, std::size_t s, RealVector b) {
  std::vector<double> l(s * s, 0.0);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double v = g[i * s + j];
      for (std::size_t p = 0; p < j; ++p) v -= l[i * s + p] * l[j * s + p];
      if (i == j) {
        if (!(v > 0.0)) throw NumericalFailure("reduce_tuple: Gram matrix not positive", v);
        l[i * s + i] = std::sqrt(v);
      } else {
        l[i * s + j] = v / l[j * s + j];
      }
    }
  }
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t p = 0; p < i; ++p) b[i] -= l[i * s + p] * b[p];
    b[i] /= l[i * s + i];
  }
  for (std::size_t i = s; i-- > 0;) {
    for (std::size_t p = i + 1; p < s; ++p) b[i] -= l[p * s + i] * b[p];
    b[i] /= l[i * s + i];
  }
  return b;
}

}  // namespace

Reduction reduce_tuple(const HermitianTuple& a, double tol) {
  const std::size_t m = a.size();
  double largest = 0.0;
  for (const auto& x : a) largest = std::max(largest, x.frobenius_norm());

  std::vector<std::size_t> selected;
  std::vector<HermitianMatrix> basis;  // orthonormal in Re tr(X^*Y)
  for (std::size_t j = 0; j < m; ++j) {
    HermitianMatrix r = a[j];
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) r -= real_inner(q, r) * q;
    }
    const double rn = r.frobenius_norm();
    if (largest > 0.0 && rn > tol * largest) {
      selected.push_back(j);
      basis.push_back((1.0 / rn) * r);
    }
  }

  if (selected.empty()) {
    std::vector<double> t(m, 0.0);
    t[0] = 1.0;
    return {HermitianTuple({a[0]}), RealTransform(1, m, std::move(t)), {0}};
  }

  const std::size_t s = selected.size();
  std::vector<HermitianMatrix> members;
  for (std::size_t i : selected) members.push_back(a[i]);
  std::vector<double> gram(s * s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t l = 0; l < s; ++l) gram[i * s + l] = real_inner(members[i], members[l]);
  }
  std::vector<double> t(s * m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const auto self = std::find(selected.begin(), selected.end(), j);
    if (self != selected.end()) {
      t[static_cast<std::size_t>(self - selected.begin()) * m + j] = 1.0;
      continue;
    }
    RealVector rhs(s);
    for (std::size_t i = 0; i < s; ++i) rhs[i] = real_inner(members[i], a[j]);
    const RealVector x = cholesky_solve(gram, s, std::move(rhs));
    for (std::size_t i = 0; i < s; ++i) t[i * m + j] = x[i];
  }
  return {HermitianTuple(std::move(members)), RealTransform(s, m, std::move(t)),
          std::move(selected)};
}

// --- Compression inclusion -------------------------------------------------

RangeCertificate compression_inclusion_check(const HermitianTuple& a, const RangeCertificate& cert,
                                             const Isometry& x) {
  require_rows(a, cert.witness, "compression_inclusion_check");
  if (x.n() != a.dim()) throw DimensionError("compression_inclusion_check: X has wrong row count");
  const std::size_t n = a.dim();
  const std::size_t k = cert.k();
  const std::size_t r = n - x.k();
  if (r < 1 || r >= k) {
    std::ostringstream os;
    os << "compression_inclusion_check: need 1 <= r < k, got r = " << r << ", k = " << k;
    throw DimensionError(os.str());
  }
  const std::size_t target = k - r;

  // Principal vectors between range(U) and range(X): eigenvectors of
  // (X^*U)^*(X^*U) with eigenvalue cos^2 of the principal angle.
  const ComplexMatrix xu = adjoint_times(x.matrix(), cert.witness.matrix());
  const auto eig = herm_eig(HermitianMatrix::symmetrized(adjoint_times(xu, xu)));
  const double cos_floor = 1.0 - 1e-10;
  std::vector<std::size_t> inside;
  for (std::size_t i = k; i-- > 0;) {
    if (eig.values[i] >= cos_floor * cos_floor) inside.push_back(i);
  }
  if (inside.size() < target) {
    std::ostringstream os;
    os << "compression_inclusion_check: intersection has dimension " << inside.size()
       << " after rank decision, need " << target;
    throw DegeneracyError(os.str(), inside.size(), target);
  }
  ComplexMatrix coords(k, target);
  for (std::size_t c = 0; c < target; ++c) {
    for (std::size_t i = 0; i < k; ++i) coords(i, c) = eig.vectors(i, inside[c]);
  }
  // X^*(U c) are coordinates of intersection vectors inside range(X).
  const ComplexMatrix w = orthonormalize(xu * coords);
  if (w.cols() < target) {
    throw DegeneracyError("compression_inclusion_check: intersection basis collapsed", w.cols(),
                          target);
  }
  const HermitianTuple compressed = compress(a, x);
  Isometry witness(w);
  const double residual = residual_at(compressed, witness, cert.point);
  return {cert.point, std::move(witness), residual};
}

}  // namespace rankrange
