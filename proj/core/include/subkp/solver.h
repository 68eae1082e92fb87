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
#ifndef SUBKP_SOLVER_H_
#define SUBKP_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "subkp/kparity.h"
#include "subkp/objective.h"
#include "subkp/sets.h"

namespace subkp {

// Geometric threshold ladder m_i = W * tau * 2^-i with tau = 2^alpha.
struct Thresholds {
  double W = 0.0;
  double alpha = 1.0;

  double tau() const;
  // Exact power-of-two scaling of W*tau, so m(i-1) == 2*m(i) bit for bit.
  double m(int i) const;
};

// Move types, numbered as in the improvement definition:
//  kAdd:       S = {x},      N = {}
//  kSwap:      S = {x},      N = {y}, and the swap gains >= eps * theta
//  kDoubleAdd: S = {x1, x2}, N = {y}
enum class ImprovementKind { kAdd = 1, kSwap = 2, kDoubleAdd = 3 };

struct Improvement {
  ImprovementKind kind = ImprovementKind::kAdd;
  // In insertion order; for kDoubleAdd this is the labeling (x1, x2).
  std::vector<EdgeId> added;
  IdSet removed;

  friend bool operator==(const Improvement&, const Improvement&) = default;
};

enum class ImprovementPolicy {
  // Kinds in order 1, 2, 3; within a kind candidates by ascending id.
  kFirstImprovement,
};

struct SolverConfig {
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  ImprovementPolicy policy = ImprovementPolicy::kFirstImprovement;
  // Overrides the seeded draw; must lie in (0, 1].
  std::optional<double> alpha;
};

struct IterationRecord {
  int index = 0;
  double threshold = 0.0;
  std::vector<Improvement> improvements;
  IdSet final_set;  // A_i when the iteration ended
};

struct RunTrace {
  double alpha = 1.0;
  double tau = 2.0;
  double W = 0.0;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  // Reference runs also record empty iterations.
  std::vector<IterationRecord> iterations;
  // a_1..a_|A|, ordered by the last time each element was added; kind-3
  // moves insert x1 before x2.
  std::vector<EdgeId> insertion_order;
  IdSet output;
  std::uint64_t value_calls = 0;
  std::uint64_t feasibility_calls = 0;
  std::uint64_t improvement_count = 0;

  Thresholds thresholds() const { return {W, alpha}; }
  // Iterations that produced a non-empty A_i, in order.
  std::vector<const IterationRecord*> NonEmptyIterations() const;
};

struct RunResult {
  IdSet solution;
  RunTrace trace;
};

// max over e in 'edges' of f(e | ∅); -infinity for an empty list.
double ComputeW(const ValueOracle& f, std::span<const int> edges);

// alpha = 1 - U for U in [0, 1); returns (alpha, 2^alpha).
std::pair<double, double> AlphaFromUniform(double u);
// First draw of Rng(seed) fed through AlphaFromUniform.
std::pair<double, double> SampleAlpha(std::uint64_t seed);

// Unique i with m_i <= w < m_{i-1}. Throws InputError unless 0 < w <= W.
int FastForward(double W, double tau, double w);

// First (theta, eps)-improvement for A = a_prev u a_cur whose removed set
// lies in a_cur, under the fixed scan order of kFirstImprovement.
std::optional<Improvement> FindImprovement(const ValueOracle& f,
                                           const KParityConstraint& c,
                                           std::span<const int> a_prev,
                                           std::span<const int> a_cur,
                                           double theta, double epsilon);

// Runs iteration by iteration, including empty ones.
RunResult RunReference(const ValueOracle& f, const KParityConstraint& c,
                       const SolverConfig& config);

// Skips empty iterations by jumping straight to the next threshold that
// admits the best feasible marginal. Same output as RunReference for equal
// seeds.
RunResult RunEfficient(const ValueOracle& f, const KParityConstraint& c,
                       const SolverConfig& config);

// (1 + 2/eps) * |E|.
double ImprovementBudget(double epsilon, std::size_t num_edges);

}  // namespace subkp

#endif  // SUBKP_SOLVER_H_
