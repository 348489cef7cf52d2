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

#include "rankrange/random.hpp"

#include <cmath>

#include "rankrange/error.hpp"
#include "rankrange/linalg.hpp"

namespace rankrange {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

HermitianMatrix random_hermitian(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("random_hermitian: n must be positive");
  ComplexMatrix g(n, n);
  for (auto& z : g.entries()) z = rng.complex_normal();
  return HermitianMatrix::symmetrized(g);
}

Isometry random_isometry(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n || k == 0) throw DimensionError("random_isometry: need 0 < k <= n");
  ComplexMatrix g(n, k);
  for (auto& z : g.entries()) z = rng.complex_normal();
  return Isometry(thin_qr(g).q, 1e-12);
}

ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  if (n == 0) throw DimensionError("random_unit_vector: n must be positive");
  ComplexVector x(n);
  for (auto& z : x) z = rng.complex_normal();
  const double r = norm(x);
  for (auto& z : x) z /= r;
  return x;
}

RealVector random_direction(std::size_t m, Rng& rng) {
  if (m == 0) throw DimensionError("random_direction: m must be positive");
  RealVector c(m);
  double s = 0.0;
  do {
    s = 0.0;
    for (auto& v : c) {
      v = rng.normal();
      s += v * v;
    }
  } while (s == 0.0);
  const double r = std::sqrt(s);
  for (auto& v : c) v /= r;
  return c;
}

HermitianTuple random_tuple(std::size_t m, std::size_t n, Rng& rng) {
  std::vector<HermitianMatrix> mats;
  mats.reserve(m);
  for (std::size_t j = 0; j < m; ++j) mats.push_back(random_hermitian(n, rng));
  return HermitianTuple(std::move(mats));
}

HermitianMatrix seeded_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(n, rng);
}

Isometry seeded_isometry(std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_isometry(n, k, rng);
}

ComplexVector seeded_unit_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unit_vector(n, rng);
}

}  // namespace rankrange
