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

#include <benchmark/benchmark.h>

#include "rankrange/geometry.hpp"
#include "rankrange/linalg.hpp"
#include "rankrange/membership.hpp"
#include "rankrange/qec.hpp"
#include "rankrange/random.hpp"
#include "rankrange/tverberg.hpp"

using namespace rankrange;

static void BM_HermEig(benchmark::State& state) {
  const HermitianMatrix a = seeded_hermitian(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(a));
}
BENCHMARK(BM_HermEig)->RangeMultiplier(2)->Range(4, 64);

static void BM_MembershipFree(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const HermitianTuple a = random_tuple(2, n, rng);
  MembershipOptions opts;
  opts.restarts = 8;
  opts.seed = 3;
  for (auto _ : state) benchmark::DoNotOptimize(membership_solve_free(a, 2, FreeTarget{}, opts));
}
BENCHMARK(BM_MembershipFree)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_ConstructPoint(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const std::size_t k = static_cast<std::size_t>(state.range(1));
  Rng rng(4);
  const HermitianTuple a = random_tuple(m, existence_dimension(m, k), rng);
  for (auto _ : state) benchmark::DoNotOptimize(construct_point(a, k));
}
BENCHMARK(BM_ConstructPoint)->Args({1, 2})->Args({2, 2})->Args({3, 2})->Args({2, 3})
    ->Unit(benchmark::kMillisecond);

static void BM_OuterHalfspaces(benchmark::State& state) {
  Rng rng(5);
  const HermitianTuple a = random_tuple(3, 16, rng);
  for (auto _ : state) benchmark::DoNotOptimize(outer_halfspaces(a, 2, 128, 6));
}
BENCHMARK(BM_OuterHalfspaces)->Unit(benchmark::kMillisecond);

static void BM_FindCodeBitFlip(benchmark::State& state) {
  const KrausChannel ch = builtin_channel("bit_flip_3q", 0.1).channel;
  FindCodeOptions opts;
  opts.membership.seed = 7;
  for (auto _ : state) benchmark::DoNotOptimize(find_code(ch, 2, opts));
}
BENCHMARK(BM_FindCodeBitFlip)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
