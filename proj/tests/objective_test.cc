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
#include "subkp/objective.h"

#include <gtest/gtest.h>

#include <memory>

#include "subkp/errors.h"
#include "test_support.h"

namespace subkp {
namespace {

using testing::AllSubsets;
using testing::Pick;

// |S|^2 is supermodular.
class Square final : public ValueOracle {
 public:
  explicit Square(int n) : ValueOracle(n, ObjectiveClass::kSubmodular) {}
  double Evaluate(std::span<const int> s) const override {
    return double(s.size() * s.size());
  }
};

TEST(ModularTest, ValuesAndClass) {
  ModularObjective f(0.0, {3, 5, -1});
  EXPECT_EQ(f.Value(IdSet{}), 0.0);
  EXPECT_EQ(f.Value(IdSet{0, 1}), 8.0);
  EXPECT_EQ(f.Value(IdSet{1, 0, 1}), 8.0);
  EXPECT_EQ(f.Marginal(2, IdSet{0}), -1.0);
  EXPECT_EQ(f.MarginalSet(IdSet{1, 2}, IdSet{0}), 4.0);
  EXPECT_EQ(f.declared_class(), ObjectiveClass::kLinear);
  EXPECT_EQ(ModularObjective(1.0, {1, 2}).declared_class(),
            ObjectiveClass::kMonotoneSubmodular);
  EXPECT_EQ(ModularObjective(1.0, {1, -2}).declared_class(),
            ObjectiveClass::kSubmodular);
  EXPECT_THROW(ModularObjective(-1.0, {1}), InputError);
  EXPECT_THROW(f.Value(IdSet{3}), InputError);
  EXPECT_THROW(f.Value(IdSet{-1}), InputError);
}

TEST(ModularTest, CountsQueries) {
  ModularObjective f(0.0, {1, 2});
  const auto before = f.queries();
  f.Value(IdSet{0});
  f.Marginal(1, IdSet{0});
  EXPECT_EQ(f.queries() - before, 3u);
}

TEST(CoverageTest, WeighsUnionOfItems) {
  CoverageObjective f({1, 2, 4, 8}, {{0, 1}, {1, 2}, {3}, {}});
  EXPECT_EQ(f.Value(IdSet{}), 0.0);
  EXPECT_EQ(f.Value(IdSet{0}), 3.0);
  EXPECT_EQ(f.Value(IdSet{0, 1}), 7.0);
  EXPECT_EQ(f.Value(IdSet{0, 1, 2, 3}), 15.0);
  EXPECT_EQ(f.Marginal(3, IdSet{0}), 0.0);
  EXPECT_THROW(CoverageObjective({1}, {{1}}), InputError);
  EXPECT_THROW(CoverageObjective({-1}, {{0}}), InputError);
}

TEST(CutTest, CountsCrossingLinks) {
  CutObjective f(4, {{0, 1, 1}, {1, 2, 2}, {2, 3, 4}, {0, 3, 8}});
  EXPECT_EQ(f.Value(IdSet{}), 0.0);
  EXPECT_EQ(f.Value(IdSet{0}), 9.0);
  EXPECT_EQ(f.Value(IdSet{0, 2}), 15.0);
  EXPECT_EQ(f.Value(IdSet{0, 1, 2, 3}), 0.0);
  EXPECT_THROW(CutObjective(2, {{0, 2, 1}}), InputError);
  EXPECT_THROW(CutObjective(2, {{0, 1, -1}}), InputError);
}

TEST(SetFunctionCheckTest, RandomFamiliesAreSubmodular) {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = Pick(rng, 1, 8);
    const int family = trial % 3;
    auto f = testing::RandomObjective(rng, n, family);
    const IdSet g = testing::Range(n);
    const CheckReport sub = CheckSubmodular(*f, g);
    ASSERT_TRUE(sub.ok) << sub.violations.front();
    if (family == 1) EXPECT_TRUE(CheckMonotone(*f, g).ok);
  }
}

TEST(SetFunctionCheckTest, DetectsViolations) {
  Square sq(4);
  EXPECT_FALSE(CheckSubmodular(sq, testing::Range(4)).ok);
  CutObjective cut(2, {{0, 1, 1}});
  EXPECT_FALSE(CheckMonotone(cut, testing::Range(2)).ok);
  EXPECT_TRUE(CheckSubmodular(cut, testing::Range(2)).ok);
  ModularObjective neg(0.0, {1, -1});
  EXPECT_FALSE(CheckMonotone(neg, testing::Range(2)).ok);
  ModularObjective big(0.0, std::vector<double>(kMaxSetFunctionCheckGround + 1, 1));
  EXPECT_THROW(CheckSubmodular(big, testing::Range(kMaxSetFunctionCheckGround + 1)),
               ScaleLimitError);
}

}  // namespace
}  // namespace subkp
