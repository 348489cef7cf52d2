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

#include "rankrange/tverberg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"
#include "rankrange/simplex.hpp"

namespace rankrange {

std::size_t tverberg_point_count(std::size_t m, std::size_t k) {
  return (m + 1) * (k - 1) + 1;
}

std::size_t existence_dimension(std::size_t m, std::size_t k) {
  return (k - 1) * (m + 1) * (m + 1);
}

OrthogonalChain build_chain(const HermitianTuple& a, std::size_t q) {
  const std::size_t n = a.dim();
  const std::size_t m = a.size();
  if (q == 0) throw DimensionError("build_chain: q must be positive");
  if (q > n) throw DimensionError("build_chain: more chain vectors than the dimension");

  std::vector<ComplexVector> chain;
  std::vector<ComplexVector> span;  // x_i and A_j x_i for i < r
  chain.push_back(herm_eig(a[0]).vectors.column(0));

  for (std::size_t r = 1; r < q; ++r) {
    const ComplexVector& last = chain.back();
    span.push_back(last);
    for (const auto& aj : a) span.push_back(aj.matrix() * std::span<const Complex>(last));
    ComplexMatrix next;
    try {
      next = orth_complement(ComplexMatrix::from_columns(span, n), std::nullopt, 1);
    } catch (const DimensionError&) {
      std::ostringstream os;
      os << "build_chain: orthogonal complement exhausted at vector " << r + 1 << " of " << q
         << " in dimension " << n << " (the construction needs n >= (k-1)(m+1)^2 = "
         << (q - 1) * (m + 1) << ")";
      throw DimensionError(os.str());
    }
    chain.push_back(next.column(0));
  }

  OrthogonalChain out;
  out.vectors = ComplexMatrix::from_columns(chain, n);
  for (const auto& x : chain) out.diag_points.push_back(a.quadratic_point(x));
  return out;
}

namespace {

/// Calls visit(labels) for each restricted growth string of length q with
/// exactly k blocks, in lexicographic order, until visit returns true.
bool enumerate_partitions(std::size_t q, std::size_t k,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> labels(q, 0);
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                           std::size_t blocks) -> bool {
    if (pos == q) return blocks == k && visit(labels);
    // Remaining positions must still be able to open the missing blocks.
    if (k > blocks && k - blocks > q - pos) return false;
    const std::size_t limit = std::min(blocks, k - 1);
    for (std::size_t b = 0; b <= limit; ++b) {
      labels[pos] = b;
      if (rec(pos + 1, std::max(blocks, b + 1))) return true;
    }
    return false;
  };
  return rec(1, 1);
}

}  // namespace

TverbergPartition tverberg_partition(std::span<const RealVector> points, std::size_t k) {
  const std::size_t q = points.size();
  if (k == 0) throw DomainError("tverberg_partition: k must be positive");
  if (q == 0) throw DomainError("tverberg_partition: no points");
  const std::size_t m = points.front().size();
  for (const auto& p : points) {
    if (p.size() != m) throw DimensionError("tverberg_partition: points differ in dimension");
  }
  if (q < tverberg_point_count(m, k)) {
    std::ostringstream os;
    os << "tverberg_partition: " << q << " points in R^" << m << " do not guarantee a " << k
       << "-part partition (need " << tverberg_point_count(m, k) << ")";
    throw DomainError(os.str());
  }
  if (q > kMaxTverbergPoints) {
    std::ostringstream os;
    os << "tverberg_partition: " << q << " points exceed the enumeration limit of "
       << kMaxTverbergPoints;
    throw ComplexityError(os.str());
  }

  TverbergPartition found;
  std::size_t tested = 0;
  const bool ok = enumerate_partitions(q, k, [&](const std::vector<std::size_t>& labels) {
    ++tested;
    // Variables t_i >= 0. Rows: sum_{R_j} t_i = 1 per part, then
    // sum_{R_j} t_i p_i - sum_{R_0} t_i p_i = 0 per part j >= 1 and coordinate.
    LinearProgram lp;
    lp.cols = q;
    lp.rows = k + (k - 1) * m;
    lp.a.assign(lp.rows * lp.cols, 0.0);
    lp.b.assign(lp.rows, 0.0);
    for (std::size_t i = 0; i < q; ++i) {
      const std::size_t part = labels[i];
      lp.a[part * q + i] = 1.0;
      for (std::size_t l = 0; l < m; ++l) {
        if (part == 0) {
          for (std::size_t j = 1; j < k; ++j) lp.a[(k + (j - 1) * m + l) * q + i] = -points[i][l];
        } else {
          lp.a[(k + (part - 1) * m + l) * q + i] = points[i][l];
        }
      }
    }
    for (std::size_t j = 0; j < k; ++j) lp.b[j] = 1.0;
    const LpSolution sol = solve_lp(lp, 1e-9);
    if (sol.status != LpStatus::kOptimal) return false;

    TverbergPartition p;
    p.parts.assign(k, {});
    p.weights.assign(k, {});
    for (std::size_t i = 0; i < q; ++i) {
      p.parts[labels[i]].push_back(i);
      p.weights[labels[i]].push_back(sol.x[i]);
    }
    // Renormalize away LP rounding.
    for (auto& w : p.weights) {
      double s = 0.0;
      for (double v : w) s += v;
      for (double& v : w) v /= s;
    }
    p.common_point.assign(m, 0.0);
    for (std::size_t idx = 0; idx < p.parts[0].size(); ++idx) {
      for (std::size_t l = 0; l < m; ++l) {
        p.common_point[l] += p.weights[0][idx] * points[p.parts[0][idx]][l];
      }
    }
    double residual = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        double s = 0.0;
        for (std::size_t idx = 0; idx < p.parts[j].size(); ++idx) {
          s += p.weights[j][idx] * points[p.parts[j][idx]][l];
        }
        residual = std::max(residual, std::abs(s - p.common_point[l]));
      }
    }
    if (residual > 1e-8) return false;
    p.residual = residual;
    found = std::move(p);
    return true;
  });
  if (!ok) {
    throw NumericalFailure("tverberg_partition: no feasible partition at the LP tolerance",
                           static_cast<double>(tested));
  }
  found.candidates_tested = tested;
  return found;
}

RangeCertificate assemble_witness(const HermitianTuple& a, const OrthogonalChain& chain,
                                  const TverbergPartition& partition) {
  const std::size_t n = a.dim();
  if (chain.vectors.rows() != n) throw DimensionError("assemble_witness: chain dimension != n");
  std::size_t covered = 0;
  std::vector<ComplexVector> cols;
  for (std::size_t j = 0; j < partition.parts.size(); ++j) {
    const auto& part = partition.parts[j];
    if (part.size() != partition.weights[j].size() || part.empty()) {
      throw DimensionError("assemble_witness: part and weight sizes differ");
    }
    ComplexVector y(n);
    for (std::size_t idx = 0; idx < part.size(); ++idx) {
      if (part[idx] >= chain.size()) throw DimensionError("assemble_witness: index outside chain");
      const double w = std::sqrt(std::max(0.0, partition.weights[j][idx]));
      for (std::size_t i = 0; i < n; ++i) y[i] += w * chain.vectors(i, part[idx]);
    }
    covered += part.size();
    cols.push_back(std::move(y));
  }
  if (covered != chain.size()) {
    throw DimensionError("assemble_witness: partition does not cover the chain");
  }
  Isometry u(ComplexMatrix::from_columns(cols, n));
  return verify_point(a, u, 1e-8).certificate;
}

RangeCertificate construct_point(const HermitianTuple& a, std::size_t k) {
  const std::size_t n = a.dim();
  const std::size_t m = a.size();
  if (k == 0 || k > n) throw DimensionError("construct_point: need 1 <= k <= n");
  if (k == 1) {
    Isometry u(herm_eig(a[0]).vectors.columns(0, 1));
    return verify_point(a, u, 1e-8).certificate;
  }
  if (n < existence_dimension(m, k)) {
    std::ostringstream os;
    os << "construct_point: n = " << n << " is below the existence bound n >= (k-1)(m+1)^2 = "
       << existence_dimension(m, k) << " for m = " << m << ", k = " << k;
    throw BoundError(os.str());
  }
  const std::size_t q = tverberg_point_count(m, k);
  if (q > kMaxTverbergPoints) {
    std::ostringstream os;
    os << "construct_point: partition search over " << q << " points exceeds the limit of "
       << kMaxTverbergPoints;
    throw ComplexityError(os.str());
  }
  const OrthogonalChain chain = build_chain(a, q);
  const TverbergPartition partition = tverberg_partition(chain.diag_points, k);
  RangeCertificate cert = assemble_witness(a, chain, partition);
  if (!(cert.residual <= 1e-8)) {
    throw NumericalFailure("construct_point: assembled witness failed verification",
                           cert.residual);
  }
  return cert;
}

}  // namespace rankrange
