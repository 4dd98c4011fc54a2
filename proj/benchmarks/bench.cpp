// Copyright 2026 The ftmd Authors
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

#include "ftmd/cactus.hpp"
#include "ftmd/families.hpp"
#include "ftmd/resolve.hpp"

namespace {

void BM_AllPairsDistances(benchmark::State& state) {
  auto g = ftmd::build_type1(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ftmd::DistanceMatrix dm(g);
    benchmark::DoNotOptimize(dm);
  }
}
BENCHMARK(BM_AllPairsDistances)->Arg(8)->Arg(32)->Arg(128);

void BM_FtDimensionType1(benchmark::State& state) {
  auto g = ftmd::build_type1(static_cast<int>(state.range(0)),
                             static_cast<int>(state.range(0)));
  ftmd::DistanceMatrix dm(g);
  for (auto _ : state) {
    auto r = ftmd::ft_metric_dimension(dm);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_FtDimensionType1)->Arg(5)->Arg(7)->Arg(9);

void BM_CactusAnalyze(benchmark::State& state) {
  auto built = ftmd::build_cactus(
      ftmd::random_cactus(7, 4, 6, 3, 8, 1, 3));
  for (auto _ : state) {
    auto a = ftmd::analyze(built.graph);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_CactusAnalyze);

}  // namespace

BENCHMARK_MAIN();
