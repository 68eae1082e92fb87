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
#ifndef SUBKP_BENCH_H_
#define SUBKP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subkp/io.h"
#include "subkp/kparity.h"
#include "subkp/objective.h"
#include "subkp/sets.h"

namespace subkp {

// Adds the feasible edge of largest positive marginal (smallest id on ties)
// until none is left.
IdSet GreedyBaseline(const ValueOracle& f, const KParityConstraint& c);

inline constexpr int kMaxBruteForceEdges = 20;

struct Optimum {
  IdSet set;
  double value = 0.0;
};

// Exhaustive maximum over feasible sets; ties go to the lexicographically
// smallest set. Throws ScaleLimitError above kMaxBruteForceEdges edges.
Optimum BruteForceOpt(const ValueOracle& f, const KParityConstraint& c);

enum class InstanceKind {
  kPartitionIntersection,  // k partition matroids, capacity 1
  kSetPacking,             // k-uniform set packing written as k-parity
  kRandomParity,           // random uniform or graphic matroid, k-vertex edges
};

enum class ObjectiveFamily { kModular, kCoverage, kCut };

std::string ToString(InstanceKind kind);
InstanceKind ParseInstanceKind(const std::string& name);
std::string ToString(ObjectiveFamily family);
ObjectiveFamily ParseObjectiveFamily(const std::string& name);

struct GeneratorParams {
  InstanceKind kind = InstanceKind::kPartitionIntersection;
  ObjectiveFamily objective = ObjectiveFamily::kModular;
  int k = 2;
  int num_edges = 8;
  int max_weight = 10;  // integer weights drawn from [1, max_weight]
  // Modular only: draw weights from [-max_weight, max_weight] instead.
  bool allow_negative = false;
};

// Same params and seed give the same instance.
InstanceSpec GenerateInstance(const GeneratorParams& params,
                              std::uint64_t seed);

enum class SolverMode { kGreedy, kHybrid, kHybridReference, kNonmonotone };

std::string ToString(SolverMode mode);
SolverMode ParseSolverMode(const std::string& name);

struct NamedInstance {
  std::string id;
  InstanceSpec spec;
};

struct ExperimentSpec {
  std::vector<NamedInstance> instances;
  SolverMode mode = SolverMode::kHybrid;
  int trials = 1;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  int ell = 0;              // nonmonotone rounds, 0 for the default
  bool compute_opt = true;  // only for instances within kMaxBruteForceEdges
  bool timing = false;      // fill the millis column
  int workers = 1;
};

struct ExperimentRow {
  std::string instance_id;
  std::uint64_t seed = 0;
  std::optional<double> alpha;
  SolverMode solver = SolverMode::kHybrid;
  int k = 0;
  int num_edges = 0;
  double value = 0.0;
  std::optional<double> opt_value;
  std::optional<double> ratio;  // opt / value
  std::uint64_t improvements = 0;
  std::uint64_t oracle_calls = 0;  // value-oracle queries
  std::optional<double> millis;
  IdSet solution;
  bool feasible = true;
};

// One row per (instance, trial), in that order. Trial t uses seed
// DeriveSeed(spec.seed, t).
std::vector<ExperimentRow> RunExperiment(const ExperimentSpec& spec);

std::string RowsToCsv(const std::vector<ExperimentRow>& rows);
// Rows plus mean and standard deviation of value and ratio per instance.
std::string RowsToJson(const std::vector<ExperimentRow>& rows);

}  // namespace subkp

#endif  // SUBKP_BENCH_H_
