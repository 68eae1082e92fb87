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
#include "subkp/sets.h"

#include <gtest/gtest.h>

namespace subkp {
namespace {

TEST(SetsTest, NormalizeSortsAndDedups) {
  EXPECT_EQ(Normalize({3, 1, 3, 2}), (IdSet{1, 2, 3}));
  EXPECT_TRUE(IsNormalized(IdSet{1, 2, 5}));
  EXPECT_FALSE(IsNormalized(IdSet{2, 2}));
  EXPECT_FALSE(IsNormalized(IdSet{3, 1}));
}

TEST(SetsTest, Algebra) {
  const IdSet a{1, 2, 4};
  const IdSet b{2, 3, 4, 7};
  EXPECT_EQ(Union(a, b), (IdSet{1, 2, 3, 4, 7}));
  EXPECT_EQ(Intersection(a, b), (IdSet{2, 4}));
  EXPECT_EQ(Difference(a, b), (IdSet{1}));
  EXPECT_TRUE(IsSubset(IdSet{2, 4}, a));
  EXPECT_FALSE(IsSubset(b, a));
  EXPECT_TRUE(Disjoint(IdSet{1}, IdSet{3}));
  EXPECT_EQ(With(a, 3), (IdSet{1, 2, 3, 4}));
  EXPECT_EQ(With(a, 2), a);
  EXPECT_EQ(Without(a, 2), (IdSet{1, 4}));
  EXPECT_EQ(Without(a, 9), a);
  EXPECT_TRUE(Contains(a, 4));
  EXPECT_FALSE(Contains(a, 3));
}

TEST(SetsTest, FromMaskAndToString) {
  const IdSet u{5, 6, 9};
  EXPECT_EQ(FromMask(u, 0b101), (IdSet{5, 9}));
  EXPECT_EQ(ToString(IdSet{1, 2}), "{1,2}");
  EXPECT_EQ(ToString(IdSet{}), "{}");
}

}  // namespace
}  // namespace subkp
