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
#include "subkp/nonmonotone.h"

#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "subkp/errors.h"
#include "test_support.h"

namespace subkp {
namespace {

using testing::Pick;

std::shared_ptr<KParityConstraint> Singletons(int n, int rank) {
  std::vector<IdSet> edges;
  for (int v = 0; v < n; ++v) edges.push_back({v});
  return std::make_shared<KParityConstraint>(
      std::make_shared<UniformMatroid>(n, rank), edges, 1);
}

TEST(DoubleGreedyTest, ModularKeepsPositiveWeights) {
  ModularObjective f(0.0, {2, -1});
  Rng rng(1);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(DoubleGreedy(f, IdSet{0, 1}, rng), IdSet{0});
  EXPECT_EQ(DoubleGreedyExactExpectation(f, IdSet{0, 1}), 2.0);
}

TEST(DoubleGreedyTest, ConstantAndZeroFunctions) {
  ModularObjective zero(0.0, {0, 0, 0});
  EXPECT_EQ(DoubleGreedyExactExpectation(zero, IdSet{0, 1, 2}), 0.0);
  ModularObjective constant(3.5, {0, 0, 0});
  EXPECT_EQ(DoubleGreedyExactExpectation(constant, IdSet{0, 1, 2}), 3.5);
  // Zero gains on both sides keep the element.
  Rng rng(2);
  EXPECT_EQ(DoubleGreedy(zero, IdSet{0, 1, 2}, rng), (IdSet{0, 1, 2}));
}

TEST(DoubleGreedyTest, SingleCutEdge) {
  CutObjective f(2, {{0, 1, 1.0}});
  EXPECT_EQ(DoubleGreedyExactExpectation(f, IdSet{0, 1}), 1.0);
  EXPECT_EQ(DoubleGreedyExactExpectation(f, IdSet{}), 0.0);
}

TEST(DoubleGreedyTest, ExactExpectationRefusesLargeSets) {
  ModularObjective f(0.0, std::vector<double>(kMaxExactDoubleGreedy + 1, 1.0));
  EXPECT_THROW(DoubleGreedyExactExpectation(f, testing::Range(kMaxExactDoubleGreedy + 1)),
               ScaleLimitError);
}

TEST(DoubleGreedyTest, HalfOfBestSubsetOnRandomFunctions) {
  Rng rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = Pick(rng, 1, 9);
    const int family = trial % 3;
    auto f = testing::RandomObjective(rng, n, family, family != 0);
    const IdSet s = testing::Range(n);
    const double exact = DoubleGreedyExactExpectation(*f, s);
    ASSERT_GE(exact, 0.5 * testing::BestSubsetValue(*f, s)) << trial;
  }
}

TEST(DoubleGreedyTest, EmpiricalMeanMatchesExactExpectation) {
  Rng rng(62);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = Pick(rng, 3, 8);
    auto f = testing::RandomObjective(rng, n, 2);
    const IdSet s = testing::Range(n);
    const double exact = DoubleGreedyExactExpectation(*f, s);
    const int runs = 10000;
    double sum = 0.0;
    double sq = 0.0;
    for (int r = 0; r < runs; ++r) {
      const double v = f->Value(DoubleGreedy(*f, s, rng));
      sum += v;
      sq += v * v;
    }
    const double mean = sum / runs;
    const double var = std::max(0.0, sq / runs - mean * mean);
    const double se = std::sqrt(var / runs);
    EXPECT_LE(std::abs(mean - exact), 3.0 * se + 1e-9) << trial;
  }
}

TEST(RepetitionsTest, DefaultEllIsExact) {
  EXPECT_EQ(DefaultEll(1), 4);
  EXPECT_EQ(DefaultEll(2), 7);
  EXPECT_EQ(DefaultEll(3), 9);
  EXPECT_EQ(DefaultEll(8), 16);
  EXPECT_EQ(DefaultEll(27), 36);
  EXPECT_THROW(DefaultEll(0), InputError);
}

TEST(RepetitionsTest, OneRoundOnMonotoneModularMatchesSingleRun) {
  Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = testing::RandomInstance(rng.Next(), Pick(rng, 1, 3), Pick(rng, 1, 8), 0);
    std::vector<double> w;
    for (int e = 0; e < inst.c->num_edge_ids(); ++e) w.push_back(Pick(rng, 1, 9));
    ModularObjective f(0.0, w);
    RepetitionsConfig cfg;
    cfg.ell = 1;
    cfg.seed = rng.Next();
    const RepetitionsResult r = Repetitions(f, *inst.c, cfg);
    SolverConfig sc;
    sc.epsilon = cfg.epsilon;
    sc.seed = DeriveSeed(cfg.seed, 0);
    EXPECT_EQ(r.solution, RunEfficient(f, *inst.c, sc).solution);
  }
}

TEST(RepetitionsTest, ZeroObjective) {
  auto c = Singletons(4, 2);
  ModularObjective zero(0.0, {0, 0, 0, 0});
  EXPECT_EQ(Repetitions(zero, *c, {}).value, 0.0);
}

TEST(RepetitionsTest, FourCycleCutBeatsEveryRound) {
  auto c = Singletons(4, 2);
  CutObjective f(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}});
  RepetitionsConfig cfg;
  cfg.ell = 2;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    const RepetitionsResult r = Repetitions(f, *c, cfg);
    ASSERT_EQ(r.rounds.size(), 2u);
    for (const auto& round : r.rounds) {
      EXPECT_GE(r.value, round.value_b);
      EXPECT_GE(r.value, round.value_b_prime);
    }
    EXPECT_EQ(r.value, f.Value(r.solution));
  }
}

TEST(RepetitionsTest, RoundInvariants) {
  Rng rng(64);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = Pick(rng, 1, 3);
    const auto inst = testing::RandomInstance(rng.Next(), k, Pick(rng, 1, 9), 2);
    RepetitionsConfig cfg;
    cfg.seed = rng.Next();
    const RepetitionsResult r = Repetitions(*inst.f, *inst.c, cfg);
    ASSERT_EQ(r.ell, DefaultEll(k));
    ASSERT_EQ(static_cast<int>(r.rounds.size()), r.ell);
    IdSet ground = inst.c->ground();
    IdSet used;
    for (const auto& round : r.rounds) {
      ASSERT_EQ(round.ground, ground);
      ASSERT_TRUE(IsSubset(round.b, ground));
      ASSERT_TRUE(IsSubset(round.b_prime, round.b));
      ASSERT_TRUE(inst.c->Feasible(round.b));
      ASSERT_TRUE(inst.c->Feasible(round.b_prime));
      ASSERT_TRUE(Disjoint(used, round.b));
      used = Union(used, round.b);
      ground = Difference(ground, round.b);
    }
    ASSERT_TRUE(inst.c->Feasible(r.solution));
  }
  auto c = Singletons(2, 1);
  ModularObjective f(0.0, {1, 1});
  RepetitionsConfig bad;
  bad.ell = -1;
  EXPECT_THROW(Repetitions(f, *c, bad), InputError);
}

}  // namespace
}  // namespace subkp
