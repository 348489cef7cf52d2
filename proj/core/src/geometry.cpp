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

#include "rankrange/geometry.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"
#include "rankrange/parallel.hpp"
#include "rankrange/random.hpp"

namespace rankrange {

namespace {

void fill_bounds(const HermitianTuple& a, HalfspaceSet& h, unsigned workers) {
  parallel_for(0, h.entries.size(), workers, [&](std::size_t i) {
    h.entries[i].bound = kth_largest_eigenvalue(a.combination(h.entries[i].c), h.k);
  });
}

}  // namespace

HalfspaceSet outer_halfspaces(const HermitianTuple& a, std::size_t k, std::size_t directions,
                              std::uint64_t seed, unsigned workers) {
  const std::size_t m = a.size();
  if (k == 0 || k > a.dim()) throw DimensionError("outer_halfspaces: need 1 <= k <= n");
  HalfspaceSet h;
  h.k = k;
  for (std::size_t j = 0; j < m; ++j) {
    for (double s : {1.0, -1.0}) {
      RealVector c(m, 0.0);
      c[j] = s;
      h.entries.push_back({std::move(c), 0.0});
    }
  }
  Rng rng(seed);
  for (std::size_t i = 0; i < directions; ++i) h.entries.push_back({random_direction(m, rng), 0.0});
  fill_bounds(a, h, workers);
  return h;
}

HalfspaceSet rebound(const HermitianTuple& a, const HalfspaceSet& h, std::size_t k) {
  if (k == 0 || k > a.dim()) throw DimensionError("rebound: need 1 <= k <= n");
  HalfspaceSet out = h;
  out.k = k;
  fill_bounds(a, out, 1);
  return out;
}

SlackReport check_against_halfspaces(const HalfspaceSet& h, std::span<const double> point) {
  SlackReport report;
  report.min_slack = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < h.entries.size(); ++i) {
    const auto& e = h.entries[i];
    if (e.c.size() != point.size()) {
      throw DimensionError("check_against_halfspaces: point dimension differs from directions");
    }
    double dot = 0.0;
    for (std::size_t j = 0; j < point.size(); ++j) dot += e.c[j] * point[j];
    const double slack = e.bound - dot;
    if (slack < report.min_slack) {
      report.min_slack = slack;
      report.argmin = i;
    }
  }
  return report;
}

SphereFamily sphere_family(std::size_t k) {
  if (k == 0) throw DimensionError("sphere_family: k must be positive");
  const Complex i1(0.0, 1.0);
  const ComplexMatrix id = ComplexMatrix::identity(k);
  const ComplexMatrix b1 = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
  const ComplexMatrix b2 = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
  const ComplexMatrix b3 = ComplexMatrix::from_rows({{0.0, i1}, {-i1, 0.0}});
  return SphereFamily{k, HermitianTuple({HermitianMatrix(kron(b1, id)),
                                         HermitianMatrix(kron(b2, id)),
                                         HermitianMatrix(kron(b3, id))})};
}

Isometry SphereFamily::witness(std::span<const double> a) const {
  if (a.size() != 3) throw DimensionError("sphere witness: point must lie in R^3");
  const double r = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  if (!(std::abs(r - 1.0) <= 1e-9)) {
    std::ostringstream os;
    os << "sphere witness: ||a|| = " << r << " is not 1";
    throw DomainError(os.str());
  }
  Complex alpha = 0.0;
  Complex beta = 1.0;
  if (a[0] != -1.0) {
    const double s = std::sqrt(2.0 * (1.0 + a[0]));
    alpha = (1.0 + a[0]) / s;
    beta = Complex(a[1], -a[2]) / s;
    const double len = std::sqrt(std::norm(alpha) + std::norm(beta));
    alpha /= len;
    beta /= len;
  }
  ComplexMatrix u(2 * k, k);
  for (std::size_t i = 0; i < k; ++i) {
    u(i, i) = alpha;
    u(k + i, i) = beta;
  }
  return Isometry(std::move(u));
}

std::vector<RangeCertificate> sample_inner(const HermitianTuple& a, std::size_t k,
                                           std::size_t samples, std::uint64_t seed,
                                           const SampleOptions& options) {
  if (k == 0 || k > a.dim()) throw DimensionError("sample_inner: need 1 <= k <= n");
  std::vector<std::optional<RangeCertificate>> slots(samples);
  parallel_for(0, samples, options.workers, [&](std::size_t s) {
    Rng rng(derive_seed(seed, s));
    FreeTarget free;
    free.anchor = a.quadratic_point(random_unit_vector(a.dim(), rng));
    MembershipOptions opts;
    opts.restarts = options.restarts;
    opts.block = options.restarts;
    opts.seed = rng.next_seed();
    const MembershipResult res = membership_solve_free(a, k, free, opts);
    if (res.best_residual() <= options.accept) slots[s] = res.best;
  });
  std::vector<RangeCertificate> out;
  for (auto& s : slots) {
    if (s) out.push_back(std::move(*s));
  }
  return out;
}

}  // namespace rankrange
