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

#ifndef RANKRANGE_RANDOM_HPP_
#define RANKRANGE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "rankrange/isometry.hpp"
#include "rankrange/matrix.hpp"

namespace rankrange {

/// Explicit random state. Every stochastic routine takes one of these (or a
/// seed) so results are reproducible; nothing is seeded from the clock.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  Complex complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
  }
  std::uint64_t next_seed() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Derives an independent stream seed from (seed, index) by splitmix64.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// (G + G^*)/2 with i.i.d. complex Gaussian G.
HermitianMatrix random_hermitian(std::size_t n, Rng& rng);
/// Q factor of a complex Gaussian n x k draw.
Isometry random_isometry(std::size_t n, std::size_t k, Rng& rng);
ComplexVector random_unit_vector(std::size_t n, Rng& rng);
/// Normalized real Gaussian direction in R^m.
RealVector random_direction(std::size_t m, Rng& rng);
HermitianTuple random_tuple(std::size_t m, std::size_t n, Rng& rng);

// Seeded conveniences: identical arguments give bitwise-identical output.
HermitianMatrix seeded_hermitian(std::size_t n, std::uint64_t seed);
Isometry seeded_isometry(std::size_t n, std::size_t k, std::uint64_t seed);
ComplexVector seeded_unit_vector(std::size_t n, std::uint64_t seed);

}  // namespace rankrange

#endif  // RANKRANGE_RANDOM_HPP_
