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

#include <cmath>

#include "doctest.h"
#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"
#include "rankrange/random.hpp"
#include "rankrange/simplex.hpp"
#include "rankrange/tverberg.hpp"
#include "support/oracles.hpp"

using namespace rankrange;

namespace {

/// Gram and compression audits for a chain.
void check_chain(const HermitianTuple& a, const OrthogonalChain& chain) {
  const std::size_t q = chain.size();
  const ComplexMatrix& x = chain.vectors;
  CHECK(oracle::isometry_defect(x) <= 1e-9);
  for (std::size_t j = 0; j < a.size(); ++j) {
    const ComplexMatrix c = adjoint_times(x, a[j].matrix() * x);
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t r = 0; r < q; ++r) {
        if (i == r) {
          CHECK(std::abs(c(i, i).real() - chain.diag_points[i][j]) <= 1e-9);
        } else {
          CHECK(std::abs(c(i, r)) <= 1e-9);
        }
      }
    }
  }
}

void check_partition(std::span<const RealVector> points, const TverbergPartition& p,
                     std::size_t k) {
  REQUIRE(p.parts.size() == k);
  std::vector<int> seen(points.size(), 0);
  for (std::size_t j = 0; j < k; ++j) {
    CHECK_FALSE(p.parts[j].empty());
    double sum = 0.0;
    RealVector combo(p.common_point.size(), 0.0);
    for (std::size_t idx = 0; idx < p.parts[j].size(); ++idx) {
      ++seen[p.parts[j][idx]];
      const double w = p.weights[j][idx];
      CHECK(w >= -1e-12);
      sum += w;
      for (std::size_t l = 0; l < combo.size(); ++l) combo[l] += w * points[p.parts[j][idx]][l];
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    for (std::size_t l = 0; l < combo.size(); ++l) {
      CHECK(std::abs(combo[l] - p.common_point[l]) <= 1e-8);
    }
  }
  for (int s : seen) CHECK(s == 1);
}

}  // namespace

TEST_CASE("simplex on small programs") {
  SUBCASE("optimum") {
    // min -x1 - x2  s.t.  x1 + 2 x2 + s1 = 4,  3 x1 + x2 + s2 = 6.
    LinearProgram lp{2, 4, {1, 2, 1, 0, 3, 1, 0, 1}, {4, 6}, {-1, -1, 0, 0}};
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.objective == doctest::Approx(-2.8));
    CHECK(s.x[0] == doctest::Approx(1.6));
    CHECK(s.x[1] == doctest::Approx(1.2));
  }
  SUBCASE("infeasible") {
    LinearProgram lp{2, 2, {1, 1, 1, 1}, {1, 2}, {}};
    CHECK(solve_lp(lp).status == LpStatus::kInfeasible);
  }
  SUBCASE("unbounded") {
    LinearProgram lp{1, 2, {1, -1}, {1}, {-1, 0}};
    CHECK(solve_lp(lp).status == LpStatus::kUnbounded);
  }
  SUBCASE("negative right-hand side and redundant rows") {
    LinearProgram lp{3, 2, {1, 1, -1, -1, 2, 2}, {1, -1, 2}, {}};
    const LpSolution s = solve_lp(lp);
    REQUIRE(s.status == LpStatus::kOptimal);
    CHECK(s.x[0] + s.x[1] == doctest::Approx(1.0));
  }
}

TEST_CASE("partition enumeration") {
  SUBCASE("three points on a line") {
    const std::vector<RealVector> pts{{0.0}, {1.0}, {2.0}};
    const TverbergPartition p = tverberg_partition(pts, 2);
    CHECK(p.parts[0] == std::vector<std::size_t>{0, 2});
    CHECK(p.parts[1] == std::vector<std::size_t>{1});
    CHECK(p.common_point[0] == doctest::Approx(1.0));
    CHECK(p.weights[0][0] == doctest::Approx(0.5));
    CHECK(p.weights[0][1] == doctest::Approx(0.5));
    check_partition(pts, p, 2);
  }
  SUBCASE("square") {
    const std::vector<RealVector> pts{{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}};
    const TverbergPartition p = tverberg_partition(pts, 2);
    CHECK(p.parts[0] == std::vector<std::size_t>{0, 1});
    CHECK(p.parts[1] == std::vector<std::size_t>{2, 3});
    CHECK(std::abs(p.common_point[0]) < 1e-12);
    CHECK(std::abs(p.common_point[1]) < 1e-12);
  }
  SUBCASE("random points, m = 2, k = 3") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng(derive_seed(61, s));
      std::vector<RealVector> pts(7, RealVector(2));
      for (auto& p : pts) {
        for (double& x : p) x = rng.normal();
      }
      check_partition(pts, tverberg_partition(pts, 3), 3);
    }
  }
  SUBCASE("preconditions") {
    const std::vector<RealVector> two{{0.0}, {1.0}};
    CHECK_THROWS_AS(tverberg_partition(two, 2), DomainError);
    const std::vector<RealVector> many(17, RealVector{0.0});
    CHECK_THROWS_AS(tverberg_partition(many, 2), ComplexityError);
  }
}

TEST_CASE("orthogonal chain") {
  SUBCASE("identity") {
    const HermitianTuple a({HermitianMatrix::identity(5)});
    const OrthogonalChain c = build_chain(a, 3);
    check_chain(a, c);
    for (const auto& p : c.diag_points) CHECK(p[0] == doctest::Approx(1.0));
  }
  SUBCASE("diag(1..9) gives disjoint supports") {
    RealVector d(9);
    for (std::size_t i = 0; i < 9; ++i) d[i] = static_cast<double>(i + 1);
    const HermitianTuple a({HermitianMatrix::diagonal(d)});
    const OrthogonalChain c = build_chain(a, 3);
    check_chain(a, c);
    CHECK(std::abs(c.vectors(0, 0)) == doctest::Approx(1.0));
    for (std::size_t i = 0; i < 9; ++i) {
      int support = 0;
      for (std::size_t r = 0; r < 3; ++r) support += std::abs(c.vectors(i, r)) > 1e-12 ? 1 : 0;
      CHECK(support <= 1);
    }
  }
  SUBCASE("random m = 2, n = 9, q = 4") {
    Rng rng(71);
    const HermitianTuple a = random_tuple(2, 9, rng);
    const OrthogonalChain c = build_chain(a, 4);
    check_chain(a, c);
    // x_1 is the lowest eigenvector of A_1.
    CHECK(c.diag_points[0][0] == doctest::Approx(herm_eig(a[0]).values[0]));
  }
  SUBCASE("exhaustion") {
    Rng rng(72);
    const HermitianTuple a = random_tuple(2, 5, rng);
    CHECK_THROWS_AS(build_chain(a, 4), DimensionError);
  }
}

TEST_CASE("construct_point") {
  SUBCASE("diag(1,2,3,4), k = 2 lies in [2, 3]") {
    const RealVector d{1.0, 2.0, 3.0, 4.0};
    const HermitianTuple a({HermitianMatrix::diagonal(d)});
    const RangeCertificate c = construct_point(a, 2);
    CHECK(c.residual <= 1e-8);
    CHECK(c.point[0] >= 2.0 - 1e-12);
    CHECK(c.point[0] <= 3.0 + 1e-12);
  }
  SUBCASE("random m = 2, k = 2 at n = 9") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      Rng rng(derive_seed(81, s));
      const HermitianTuple a = random_tuple(2, 9, rng);
      const RangeCertificate c = construct_point(a, 2);
      CHECK(oracle::residual(a, c.witness.matrix(), c.point) <= 1e-8);
    }
  }
  SUBCASE("the certified point lies in the hull of the chain points") {
    Rng rng(82);
    const HermitianTuple a = random_tuple(2, 18, rng);
    const OrthogonalChain chain = build_chain(a, tverberg_point_count(2, 3));
    const RangeCertificate c = construct_point(a, 3);
    const std::size_t q = chain.size();
    LinearProgram lp{3, q, std::vector<double>(3 * q), {c.point[0], c.point[1], 1.0}, {}};
    for (std::size_t i = 0; i < q; ++i) {
      lp.a[i] = chain.diag_points[i][0];
      lp.a[q + i] = chain.diag_points[i][1];
      lp.a[2 * q + i] = 1.0;
    }
    CHECK(solve_lp(lp, 1e-9).status == LpStatus::kOptimal);
  }
  SUBCASE("identity, any k") {
    const HermitianTuple a({HermitianMatrix::identity(4)});
    for (std::size_t k = 1; k <= 2; ++k) CHECK(construct_point(a, k).point[0] == doctest::Approx(1.0));
  }
  SUBCASE("rank one uses the lowest eigenvector") {
    Rng rng(83);
    const HermitianTuple a = random_tuple(3, 4, rng);
    const RangeCertificate c = construct_point(a, 1);
    CHECK(c.point[0] == doctest::Approx(herm_eig(a[0]).values[0]));
  }
  SUBCASE("errors") {
    Rng rng(84);
    CHECK_THROWS_AS(construct_point(random_tuple(2, 8, rng), 2), BoundError);
    CHECK_THROWS_AS(construct_point(random_tuple(2, 8, rng), 9), DimensionError);
    // m = 3, k = 5 needs 17 partition points.
    CHECK_THROWS_AS(construct_point(random_tuple(3, 64, rng), 5), ComplexityError);
  }
}
