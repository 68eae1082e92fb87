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
#include "subkp/matroid.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <memory>

#include "subkp/errors.h"
#include "test_support.h"

namespace subkp {
namespace {

using testing::AllSubsets;
using testing::Pick;
using testing::Range;

// Largest independent subset size, by enumeration.
int SlowRank(const Matroid& m, const IdSet& s) {
  int best = 0;
  for (const auto& mask : AllSubsets(static_cast<int>(s.size()))) {
    IdSet sub;
    for (int i : mask) sub.push_back(s[i]);
    if (m.IsIndependent(sub)) best = std::max(best, static_cast<int>(sub.size()));
  }
  return best;
}

TEST(UniformMatroidTest, CardinalityRule) {
  UniformMatroid m(4, 2);
  EXPECT_TRUE(m.IsIndependent(IdSet{}));
  EXPECT_TRUE(m.IsIndependent(IdSet{0, 3}));
  EXPECT_FALSE(m.IsIndependent(IdSet{0, 1, 2}));
  EXPECT_EQ(m.Rank(), 2);
  EXPECT_THROW(m.IsIndependent(IdSet{4}), InputError);
  EXPECT_THROW(UniformMatroid(3, 4), InputError);
}

TEST(PartitionMatroidTest, CapacitiesPerBlock) {
  PartitionMatroid m({{0, 1, 2}, {3, 4}}, {1, 2});
  EXPECT_TRUE(m.IsIndependent(IdSet{0, 3, 4}));
  EXPECT_FALSE(m.IsIndependent(IdSet{0, 1}));
  EXPECT_EQ(m.Rank(), 3);
  EXPECT_THROW(PartitionMatroid({{0, 1}, {1, 2}}, {1, 1}), InputError);
  EXPECT_THROW(PartitionMatroid({{0}, {2}}, {1, 1}), InputError);
  EXPECT_THROW(PartitionMatroid({{0}}, {1, 1}), InputError);
}

TEST(GraphicMatroidTest, MatchesForestOracleOnAllSubsets) {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int nodes = Pick(rng, 2, 5);
    const int n = Pick(rng, 1, 8);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
      edges.emplace_back(Pick(rng, 0, nodes - 1), Pick(rng, 0, nodes - 1));
    }
    GraphicMatroid m(nodes, edges);
    for (const auto& s : AllSubsets(n)) {
      ASSERT_EQ(m.IsIndependent(s), testing::IsForest(nodes, edges, s))
          << ToString(s);
    }
  }
}

TEST(GraphicMatroidTest, TriangleHasRankTwo) {
  GraphicMatroid m(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(m.Rank(), 2);
  EXPECT_FALSE(m.IsIndependent(IdSet{0, 1, 2}));
  GraphicMatroid loop(2, {{1, 1}});
  EXPECT_FALSE(loop.IsIndependent(IdSet{0}));
}

TEST(ExplicitMatroidTest, ValidatesAxioms) {
  // {0,1} and {2} maximal: violates augmentation.
  const std::vector<IdSet> bad{{}, {0}, {1}, {2}, {0, 1}};
  EXPECT_THROW(ExplicitMatroid(3, bad), InputError);
  ExplicitMatroid raw(3, bad, ExplicitMatroid::Validation::kRaw);
  const AxiomReport rep = CheckAxioms(raw);
  EXPECT_FALSE(rep.ok);
  EXPECT_FALSE(rep.violations.empty());

  const std::vector<IdSet> not_closed{{}, {0, 1}};
  ExplicitMatroid raw2(2, not_closed, ExplicitMatroid::Validation::kRaw);
  EXPECT_FALSE(CheckAxioms(raw2).ok);

  ExplicitMatroid ok(3, {{}, {0}, {1}, {2}, {0, 1}, {0, 2}});
  EXPECT_TRUE(CheckAxioms(ok).ok);
  EXPECT_EQ(ok.IndependentSets().size(), 6u);
  EXPECT_THROW(ExplicitMatroid(ExplicitMatroid::kMaxGround + 1, {{}}),
               ScaleLimitError);
}

TEST(MatroidTest, RandomFamiliesSatisfyAxioms) {
  Rng rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    MatroidPtr m = testing::RandomMatroid(rng, Pick(rng, 0, 10));
    const AxiomReport rep = CheckAxioms(*m);
    ASSERT_TRUE(rep.ok) << trial << ": " << rep.violations.front();
  }
}

TEST(MatroidTest, RankAndGreedyBasisMatchEnumeration) {
  Rng rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = Pick(rng, 1, 8);
    MatroidPtr m = testing::RandomMatroid(rng, n);
    for (const auto& s : AllSubsets(n)) {
      const IdSet b = m->GreedyBasis(s);
      ASSERT_TRUE(m->IsIndependent(b));
      ASSERT_TRUE(IsSubset(b, s));
      ASSERT_EQ(m->Rank(s), SlowRank(*m, s));
      ASSERT_EQ(static_cast<int>(b.size()), m->Rank(s));
    }
  }
}

TEST(DerivedMatroidTest, RestrictionKeepsIdsAndIndependence) {
  Rng rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = Pick(rng, 2, 9);
    MatroidPtr m = testing::RandomMatroid(rng, n);
    IdSet sub;
    for (int x = 0; x < n; ++x) {
      if (testing::Coin(rng, 0.6)) sub.push_back(x);
    }
    MatroidPtr r = Restrict(m, sub);
    EXPECT_EQ(r->ground(), sub);
    EXPECT_TRUE(CheckAxioms(*r).ok);
    for (const auto& mask : AllSubsets(static_cast<int>(sub.size()))) {
      const IdSet s = FromMask(sub, [&] {
        std::uint64_t bits = 0;
        for (int i : mask) bits |= 1ull << i;
        return bits;
      }());
      ASSERT_EQ(r->IsIndependent(s), m->IsIndependent(s));
    }
    if (sub.size() < static_cast<std::size_t>(n)) {
      const int outside = Difference(Range(n), sub).front();
      EXPECT_THROW(r->IsIndependent(IdSet{outside}), InputError);
    }
  }
}

TEST(DerivedMatroidTest, ContractionMatchesRankDefinition) {
  Rng rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = Pick(rng, 2, 9);
    MatroidPtr m = testing::RandomMatroid(rng, n);
    IdSet s;
    for (int x = 0; x < n; ++x) {
      if (testing::Coin(rng, 0.35)) s.push_back(x);
    }
    MatroidPtr mc = Contract(m, s);
    const IdSet rest = Difference(Range(n), s);
    EXPECT_EQ(mc->ground(), rest);
    EXPECT_TRUE(CheckAxioms(*mc).ok);
    const int rs = SlowRank(*m, s);
    for (const auto& mask : AllSubsets(static_cast<int>(rest.size()))) {
      IdSet x;
      for (int i : mask) x.push_back(rest[i]);
      const bool expect = SlowRank(*m, Union(x, s)) - rs == static_cast<int>(x.size());
      ASSERT_EQ(mc->IsIndependent(x), expect) << ToString(x) << " / " << ToString(s);
    }
  }
}

TEST(DerivedMatroidTest, ContractWithBasisChecksBasis) {
  auto m = std::make_shared<UniformMatroid>(4, 2);
  EXPECT_NO_THROW(ContractWithBasis(m, IdSet{0, 1, 2}, IdSet{0, 2}));
  EXPECT_THROW(ContractWithBasis(m, IdSet{0, 1, 2}, IdSet{0}), InputError);
  EXPECT_THROW(ContractWithBasis(m, IdSet{0, 1}, IdSet{3}), InputError);
}

TEST(DerivedMatroidTest, TruncationCapsSize) {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = Pick(rng, 1, 9);
    MatroidPtr m = testing::RandomMatroid(rng, n);
    const int r = Pick(rng, 0, m->Rank());
    MatroidPtr t = Truncate(m, r);
    EXPECT_EQ(t->Rank(), r);
    EXPECT_TRUE(CheckAxioms(*t).ok);
    for (const auto& s : AllSubsets(n)) {
      ASSERT_EQ(t->IsIndependent(s),
                m->IsIndependent(s) && static_cast<int>(s.size()) <= r);
    }
    EXPECT_THROW(Truncate(m, m->Rank() + 1), InputError);
  }
}

TEST(AxiomCheckTest, RefusesLargeGround) {
  UniformMatroid m(kMaxAxiomCheckGround + 1, 3);
  EXPECT_THROW(CheckAxioms(m), ScaleLimitError);
}

}  // namespace
}  // namespace subkp
