// Copyright 2026 The Authors.
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

#include "subkp/bench.h"
#include "subkp/io.h"
#include "subkp/nonmonotone.h"
#include "subkp/solver.h"

namespace subkp {
namespace {

Instance Make(InstanceKind kind, ObjectiveFamily family, int k, int edges) {
  GeneratorParams p;
  p.kind = kind;
  p.objective = family;
  p.k = k;
  p.num_edges = edges;
  return BuildInstance(GenerateInstance(p, 42));
}

void BM_Efficient(benchmark::State& state) {
  const Instance inst = Make(InstanceKind::kRandomParity, ObjectiveFamily::kCoverage,
                             static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  SolverConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(RunEfficient(*inst.objective, inst.constraint, cfg));
  }
}
BENCHMARK(BM_Efficient)->ArgsProduct({{2, 3}, {16, 64, 128}});

void BM_Reference(benchmark::State& state) {
  const Instance inst = Make(InstanceKind::kRandomParity, ObjectiveFamily::kCoverage,
                             static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  SolverConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(RunReference(*inst.objective, inst.constraint, cfg));
  }
}
BENCHMARK(BM_Reference)->ArgsProduct({{2, 3}, {16, 64}});

void BM_Greedy(benchmark::State& state) {
  const Instance inst = Make(InstanceKind::kPartitionIntersection, ObjectiveFamily::kModular,
                             2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyBaseline(*inst.objective, inst.constraint));
  }
}
BENCHMARK(BM_Greedy)->Arg(16)->Arg(64)->Arg(256);

void BM_Repetitions(benchmark::State& state) {
  const Instance inst = Make(InstanceKind::kSetPacking, ObjectiveFamily::kCut,
                             static_cast<int>(state.range(0)), 32);
  RepetitionsConfig cfg;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    benchmark::DoNotOptimize(Repetitions(*inst.objective, inst.constraint, cfg));
  }
}
BENCHMARK(BM_Repetitions)->Arg(2)->Arg(3);

}  // namespace
}  // namespace subkp

BENCHMARK_MAIN();
