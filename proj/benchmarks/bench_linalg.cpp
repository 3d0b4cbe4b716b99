// Copyright 2026 The heartlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "heartlab/modlinalg.hpp"
#include "heartlab/random.hpp"

namespace {

using heartlab::linalg::ModMatrix;

ModMatrix random_matrix(std::uint32_t ell, std::size_t n, std::uint64_t seed) {
  heartlab::SplitMix64 rng(seed);
  ModMatrix m(ell, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<std::uint32_t>(rng.below(ell)));
  }
  return m;
}

// GF(2) rows are packed into words; odd ell stores one entry per coordinate.
void BM_Rank(benchmark::State& state) {
  const auto ell = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const ModMatrix m = random_matrix(ell, n, 7);
  for (auto _ : state) benchmark::DoNotOptimize(heartlab::linalg::rank(m));
  state.SetComplexityN(state.range(1));
}
BENCHMARK(BM_Rank)->ArgsProduct({{2, 3, 251}, {64, 128, 256, 512}});

void BM_Multiply(benchmark::State& state) {
  const auto ell = static_cast<std::uint32_t>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  const ModMatrix a = random_matrix(ell, n, 1);
  const ModMatrix b = random_matrix(ell, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->ArgsProduct({{2, 3}, {64, 256}});

void BM_Kernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  ModMatrix m = random_matrix(2, n, 3);
  for (std::size_t i = 0; i < n / 2; ++i) m.row(i) = m.row(n - 1 - i);
  for (auto _ : state) benchmark::DoNotOptimize(heartlab::linalg::kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(128)->Arg(512);

}  // namespace
