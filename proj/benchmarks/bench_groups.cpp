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

#include "heartlab/groupzoo.hpp"
#include "heartlab/modrep.hpp"

namespace {

namespace zoo = heartlab::zoo;
namespace rep = heartlab::rep;

void BM_SchreierSimsM24(benchmark::State& state) {
  for (auto _ : state) {
    const auto g = zoo::mathieu(24);
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_SchreierSimsM24)->Unit(benchmark::kMillisecond);

void BM_SchreierSimsPsl(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  const auto q = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    const auto g = zoo::psl(m, q);
    benchmark::DoNotOptimize(g.group.order());
  }
}
BENCHMARK(BM_SchreierSimsPsl)->Args({4, 3})->Args({3, 9})->Args({4, 4})->Unit(benchmark::kMillisecond);

void BM_EndomorphismAlgebra(benchmark::State& state) {
  const auto h = rep::heart(zoo::mathieu(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rep::endomorphism_algebra(h).dimension());
}
BENCHMARK(BM_EndomorphismAlgebra)->Arg(11)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_EndomorphismAlgebraDirect(benchmark::State& state) {
  const auto h = rep::heart(zoo::mathieu(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(rep::endomorphism_algebra_direct(h).dimension());
}
BENCHMARK(BM_EndomorphismAlgebraDirect)->Arg(11)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_MeatAxe(benchmark::State& state) {
  const auto h = rep::heart(zoo::psl(4, 3).group);
  for (auto _ : state) benchmark::DoNotOptimize(rep::is_irreducible(h, 0).verdict);
}
BENCHMARK(BM_MeatAxe)->Unit(benchmark::kMillisecond);

}  // namespace
