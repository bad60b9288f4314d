// Copyright 2026 The anglekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "anglekit/constructions.hpp"
#include "anglekit/counters.hpp"
#include "anglekit/predicates.hpp"

namespace {

using namespace anglekit;

void BM_HelixHistogram(benchmark::State& state) {
  const PointConfig c = cyl_helix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_distinct_angles(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HelixHistogram)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_ExactHistogram(benchmark::State& state) {
  const PointConfig c = random_general_position(static_cast<int>(state.range(0)), 3, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_distinct_angles(c));
}
BENCHMARK(BM_ExactHistogram)->Arg(10)->Arg(20)->Arg(30);

void BM_VerifyHelix(benchmark::State& state) {
  const PointConfig c = cyl_helix(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_general_position(c));
}
BENCHMARK(BM_VerifyHelix)->Arg(20)->Arg(40);

void BM_Chains(benchmark::State& state) {
  const AngleTable t = AngleTable::build(log_spiral(12, 0.1), kDefaultEps);
  for (auto _ : state) benchmark::DoNotOptimize(count_chains(t, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Chains)->Arg(1)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
