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
#ifndef SUBKP_NONMONOTONE_H_
#define SUBKP_NONMONOTONE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "subkp/kparity.h"
#include "subkp/objective.h"
#include "subkp/random.h"
#include "subkp/sets.h"
#include "subkp/solver.h"

namespace subkp {

// Randomized double greedy over s in ascending id order. When both clipped
// gains are zero the element is kept.
IdSet DoubleGreedy(const ValueOracle& f, std::span<const int> s, Rng& rng);

inline constexpr int kMaxExactDoubleGreedy = 14;

// Expected f(T) of DoubleGreedy, computed by following both branches at every
// element. Throws ScaleLimitError above kMaxExactDoubleGreedy elements.
double DoubleGreedyExactExpectation(const ValueOracle& f,
                                    std::span<const int> s);

// Smallest integer l with l >= 4 k^(2/3), computed without rounding error.
int DefaultEll(int k);

struct RepetitionsConfig {
  int ell = 0;  // 0 picks DefaultEll(k)
  double epsilon = 0.5;
  std::uint64_t seed = 0;
};

struct RepetitionRound {
  IdSet ground;  // E_{i-1}
  IdSet b;       // output of the threshold run on ground
  IdSet b_prime; // double greedy applied to b
  double value_b = 0.0;
  double value_b_prime = 0.0;
  RunTrace trace;
};

struct RepetitionsResult {
  IdSet solution;
  double value = 0.0;
  int ell = 0;
  std::vector<RepetitionRound> rounds;
};

RepetitionsResult Repetitions(const ValueOracle& f, const KParityConstraint& c,
                              const RepetitionsConfig& config);

}  // namespace subkp

#endif  // SUBKP_NONMONOTONE_H_
