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

#include "rankrange/star.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"

namespace rankrange {

namespace {

constexpr double kSampleTol = 1e-8;

void check_ts(std::span<const double> ts) {
  for (double t : ts) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("star segment: t must lie in [0, 1]");
  }
}

void check_center(const HermitianTuple& a, const RangeCertificate& c, const char* where) {
  if (c.witness.n() != a.dim() || c.point.size() != a.size()) {
    throw DimensionError(std::string(where) + ": certificate does not match the tuple");
  }
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

/// Orthonormal basis (Gram-Schmidt, two passes) of the span of `rows`;
/// rows with residual <= tol * scale are skipped.
std::vector<RealVector> real_basis(const std::vector<RealVector>& rows, double tol) {
  double scale = 1.0;
  for (const auto& r : rows) scale = std::max(scale, std::sqrt(dot(r, r)));
  std::vector<RealVector> basis;
  for (RealVector v : rows) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const double c = dot(q, v);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * q[i];
      }
    }
    const double len = std::sqrt(dot(v, v));
    if (len <= tol * scale) continue;
    for (double& x : v) x /= len;
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unit vector orthogonal to `basis`, from the standard basis vector with the
/// largest residual.
std::optional<RealVector> kernel_direction(const std::vector<RealVector>& basis, std::size_t dim) {
  RealVector best;
  double best_len = 0.0;
  for (std::size_t e = 0; e < dim; ++e) {
    RealVector v(dim, 0.0);
    v[e] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const double c = dot(q, v);
        for (std::size_t i = 0; i < dim; ++i) v[i] -= c * q[i];
      }
    }
    const double len = std::sqrt(dot(v, v));
    if (len > best_len + 1e-15) {
      best_len = len;
      best = std::move(v);
    }
  }
  if (best_len <= 1e-8) return std::nullopt;
  for (double& x : best) x /= best_len;
  return best;
}

/// Solves the symmetric positive definite system s y = rhs by Cholesky.
RealVector spd_solve(std::vector<double> s, RealVector rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t j = 0; j < n; ++j) {
    double d = s[j * n + j];
    for (std::size_t p = 0; p < j; ++p) d -= s[j * n + p] * s[j * n + p];
    if (!(d > 0.0)) throw NumericalFailure("star segment: singular first-row Gram matrix", d);
    d = std::sqrt(d);
    s[j * n + j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s[i * n + j];
      for (std::size_t p = 0; p < j; ++p) v -= s[i * n + p] * s[j * n + p];
      s[i * n + j] = v / d;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < i; ++p) rhs[i] -= s[i * n + p] * rhs[p];
    rhs[i] /= s[i * n + i];
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t p = i + 1; p < n; ++p) rhs[i] -= s[p * n + i] * rhs[p];
    rhs[i] /= s[i * n + i];
  }
  return rhs;
}

RealVector segment_point(const RealVector& center, const RealVector& tip, double t) {
  RealVector p(center.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = center[j] + t * (tip[j] - center[j]);
  return p;
}

/// Certificate for u on the original tuple, provided the residual at `target`
/// is within kSampleTol; nullopt otherwise.
std::optional<RangeCertificate> certify(const HermitianTuple& a, const ComplexMatrix& u,
                                        std::span<const double> target) {
  if (!(isometry_defect(u) <= 1e-9)) return std::nullopt;
  const Isometry iso(u, 1e-9);
  if (!(residual_at(a, iso, target) <= kSampleTol)) return std::nullopt;
  return verify_point(a, iso, kSampleTol).certificate;
}

}  // namespace

std::string to_string(StarCase c) {
  switch (c) {
    case StarCase::kRankK:
      return "rank_k";
    case StarCase::kDependent:
      return "dependent";
    case StarCase::kIndependent:
      return "independent";
    case StarCase::kInRange:
      return "in_range";
  }
  return "unknown";
}

std::vector<double> equally_spaced(std::size_t count) {
  std::vector<double> ts;
  if (count == 1) ts.push_back(1.0);
  for (std::size_t i = 0; count > 1 && i < count; ++i) {
    ts.push_back(static_cast<double>(i) / static_cast<double>(count - 1));
  }
  return ts;
}

StarSegment star_segment_rank_k(const HermitianTuple& a, const RangeCertificate& center,
                                const RangeCertificate& tip, std::span<const double> ts) {
  check_center(a, center, "star_segment_rank_k");
  check_center(a, tip, "star_segment_rank_k");
  check_ts(ts);
  const std::size_t m = a.size();
  const std::size_t n = a.dim();
  const std::size_t k = tip.k();
  const std::size_t k_hat = center.k();
  if (k_hat < (m + 2) * k) {
    std::ostringstream os;
    os << "star_segment_rank_k: center rank " << k_hat << " is below (m + 2)k = " << (m + 2) * k;
    throw DomainError(os.str());
  }

  const HermitianTuple shifted = translate_tuple(a, center.point);
  const ComplexMatrix& x = tip.witness.matrix();
  ComplexMatrix span = x;
  for (const auto& aj : shifted) span = hcat(span, aj.matrix() * x);
  const ComplexMatrix y1_all = orth_complement(span, center.witness.matrix());
  if (y1_all.cols() < k) {
    throw DegeneracyError("star_segment_rank_k: intersection with the center range is too small",
                          y1_all.cols(), k);
  }
  const ComplexMatrix y1 = y1_all.columns(0, k);

  StarSegment seg{center, tip, {}, StarCase::kRankK, 0};
  for (double t : ts) {
    const double st = std::sqrt(t);
    const double sc = std::sqrt(1.0 - t);
    ComplexMatrix u(n, k);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < k; ++c) u(i, c) = st * x(i, c) + sc * y1(i, c);
    }
    const RealVector target = segment_point(center.point, tip.point, t);
    auto cert = certify(a, u, target);
    if (!cert) {
      const double res = residual_at(a, Isometry(u, 1e-6), target);
      std::ostringstream os;
      os << "star_segment_rank_k: sample at t = " << t << " failed verification";
      throw NumericalFailure(os.str(), res);
    }
    seg.samples.push_back({t, std::move(*cert)});
  }
  return seg;
}

StarSegment star_segment_rank_1(const HermitianTuple& a, const RangeCertificate& center,
                                std::span<const Complex> x, std::span<const double> ts) {
  check_center(a, center, "star_segment_rank_1");
  check_ts(ts);
  const std::size_t m = a.size();
  const std::size_t n = a.dim();
  const std::size_t k_hat = center.k();
  if (x.size() != n) throw DimensionError("star_segment_rank_1: x has the wrong length");
  if (!(2 * k_hat > m + 1)) {
    std::ostringstream os;
    os << "star_segment_rank_1: center rank " << k_hat << " must exceed (m + 1)/2";
    throw DomainError(os.str());
  }
  if (!(std::abs(norm(x) - 1.0) <= 1e-10)) {
    throw PreconditionError("star_segment_rank_1: x must be a unit vector", norm(x));
  }

  const ComplexMatrix xcol(n, 1, ComplexVector(x.begin(), x.end()));
  StarSegment seg;
  seg.center = center;
  seg.tip = verify_point(a, Isometry(xcol), kSampleTol).certificate;

  const HermitianTuple shifted = translate_tuple(a, center.point);
  const ComplexMatrix& cw = center.witness.matrix();
  // x = u0 x_perp + X w with x_perp ⊥ range(X), u0 >= 0.
  const ComplexVector w = adjoint_times(cw, xcol).column(0);
  ComplexVector perp(x.begin(), x.end());
  const ComplexVector xw = cw * std::span<const Complex>(w);
  for (std::size_t i = 0; i < n; ++i) perp[i] -= xw[i];
  const double u0 = norm(perp);

  auto emit = [&](double t, const ComplexMatrix& u) {
    auto cert = certify(a, u, segment_point(center.point, seg.tip.point, t));
    if (!cert) return false;
    seg.samples.push_back({t, std::move(*cert)});
    return true;
  };

  if (u0 <= 1e-12) {
    seg.star_case = StarCase::kInRange;
    for (double t : ts) {
      if (!emit(t, xcol)) {
        throw NumericalFailure("star_segment_rank_1: x inside the center range failed", u0);
      }
    }
    return seg;
  }
  for (auto& z : perp) z /= u0;

  // B_j = [[beta_j, v_j], [v_j^*, 0]] in the basis [x_perp | X]; L has rows
  // [Re v_j, -Im v_j] so that Re(v_j w) = L_j . (Re w, Im w).
  const std::size_t kh2 = 2 * k_hat;
  RealVector beta(m);
  std::vector<RealVector> rows(m, RealVector(kh2));
  for (std::size_t j = 0; j < m; ++j) {
    beta[j] = shifted[j].quadratic_form(perp);
    const ComplexMatrix ax = shifted[j].matrix() * cw;
    for (std::size_t l = 0; l < k_hat; ++l) {
      Complex v = 0.0;
      for (std::size_t i = 0; i < n; ++i) v += std::conj(perp[i]) * ax(i, l);
      rows[j][l] = v.real();
      rows[j][k_hat + l] = -v.imag();
    }
  }
  const std::vector<RealVector> row_basis = real_basis(rows, 1e-8);
  seg.first_row_rank = row_basis.size();
  RealVector w_real(kh2);
  for (std::size_t l = 0; l < k_hat; ++l) {
    w_real[l] = w[l].real();
    w_real[k_hat + l] = w[l].imag();
  }

  auto assemble = [&](double a0, const RealVector& wr) {
    ComplexMatrix u(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      Complex v = a0 * perp[i];
      for (std::size_t l = 0; l < k_hat; ++l) v += cw(i, l) * Complex(wr[l], wr[k_hat + l]);
      u(i, 0) = v;
    }
    return u;
  };

  // Dependent rows: z_t = sqrt(t) z + s (0, d) with L d = 0.
  auto dependent_sample = [&](double t) -> std::optional<ComplexMatrix> {
    const auto d = kernel_direction(row_basis, kh2);
    if (!d) return std::nullopt;
    const double st = std::sqrt(t);
    const double p = dot(w_real, *d);
    const double s = -st * p + std::sqrt(std::max(0.0, t * p * p + 1.0 - t));
    RealVector wr(kh2);
    for (std::size_t i = 0; i < kh2; ++i) wr[i] = st * w_real[i] + s * (*d)[i];
    return assemble(st * u0, wr);
  };

  // Independent rows: z_xi = (xi u0, (t/xi) w + u0 (t - xi^2)/(2 xi) g) with
  // L g = beta, xi chosen so that ||z_xi|| = 1.
  std::optional<RealVector> g;
  if (row_basis.size() == m) {
    std::vector<double> gram(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) gram[i * m + j] = dot(rows[i], rows[j]);
    }
    const RealVector y = spd_solve(std::move(gram), beta);
    g = RealVector(kh2, 0.0);
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < kh2; ++i) (*g)[i] += y[j] * rows[j][i];
    }
  }
  auto independent_sample = [&](double t) -> std::optional<ComplexMatrix> {
    if (!g) return std::nullopt;
    auto wxi = [&](double xi) {
      RealVector wr(kh2);
      const double c = u0 * (t - xi * xi) / (2.0 * xi);
      for (std::size_t i = 0; i < kh2; ++i) wr[i] = (t / xi) * w_real[i] + c * (*g)[i];
      return wr;
    };
    auto excess = [&](double xi) {
      const RealVector wr = wxi(xi);
      return std::sqrt(xi * xi * u0 * u0 + dot(wr, wr)) - 1.0;
    };
    double lo = std::sqrt(t);
    double hi = 2.0 * lo;
    for (int i = 0; i < 200 && excess(hi) < 0.0; ++i) hi *= 2.0;
    if (excess(hi) < 0.0) return std::nullopt;
    double xi = lo;
    if (std::abs(excess(lo)) > 1e-12) {
      for (int i = 0; i < 200; ++i) {
        xi = 0.5 * (lo + hi);
        const double e = excess(xi);
        if (std::abs(e) <= 1e-12) break;
        (e < 0.0 ? lo : hi) = xi;
      }
    }
    return assemble(xi * u0, wxi(xi));
  };

  seg.star_case = row_basis.size() == m ? StarCase::kIndependent : StarCase::kDependent;
  for (double t : ts) {
    if (t == 0.0) {
      if (!emit(t, cw.columns(0, 1))) {
        throw NumericalFailure("star_segment_rank_1: center column failed", center.residual);
      }
      continue;
    }
    if (t == 1.0) {
      if (!emit(t, xcol)) throw NumericalFailure("star_segment_rank_1: tip failed", 0.0);
      continue;
    }
    std::optional<ComplexMatrix> u = seg.star_case == StarCase::kIndependent
                                         ? independent_sample(t)
                                         : dependent_sample(t);
    if (u && emit(t, *u)) continue;
    // The other construction, in case the rank decision was borderline.
    u = seg.star_case == StarCase::kIndependent ? dependent_sample(t) : independent_sample(t);
    if (u && emit(t, *u)) continue;
    std::ostringstream os;
    os << "star_segment_rank_1: no construction verified at t = " << t
       << " (first-row real rank " << seg.first_row_rank << " of m = " << m << ")";
    throw NumericalFailure(os.str(), t);
  }
  return seg;
}

}  // namespace rankrange
