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
// Hand-rolled generators and slow reference oracles shared by the tests.

#ifndef SUBKP_TESTS_TEST_SUPPORT_H_
#define SUBKP_TESTS_TEST_SUPPORT_H_

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "subkp/kparity.h"
#include "subkp/matroid.h"
#include "subkp/objective.h"
#include "subkp/random.h"
#include "subkp/sets.h"

namespace subkp::testing {

inline int Pick(Rng& rng, int lo, int hi) {
  return lo + static_cast<int>(rng.Next() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool Coin(Rng& rng, double p) { return rng.Uniform() < p; }

inline std::vector<int> Permutation(Rng& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[Pick(rng, 0, i)]);
  return p;
}

// All subsets of {0..n-1}, in mask order.
inline std::vector<IdSet> AllSubsets(int n) {
  std::vector<IdSet> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    IdSet s;
    for (int i = 0; i < n; ++i) {
      if (mask >> i & 1u) s.push_back(i);
    }
    out.push_back(s);
  }
  return out;
}

inline IdSet Range(int n) {
  IdSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

// Forest test by counting components with a plain DFS.
inline bool IsForest(int nodes, const std::vector<std::pair<int, int>>& edges,
                     const IdSet& s) {
  std::vector<std::vector<int>> adj(nodes);
  for (int e : s) {
    auto [u, v] = edges[e];
    if (u == v) return false;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(nodes, 0);
  int components = 0;
  for (int start = 0; start < nodes; ++start) {
    if (seen[start]) continue;
    ++components;
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return static_cast<int>(s.size()) == nodes - components;
}

// A random matroid on n elements, drawn from the concrete families and
// occasionally passed through a derived construction. Ground is 0..n-1.
inline MatroidPtr RandomMatroid(Rng& rng, int n) {
  switch (Pick(rng, 0, 3)) {
    case 0:
      return std::make_shared<UniformMatroid>(n, Pick(rng, 0, n));
    case 1: {
      const int blocks = Pick(rng, 1, std::max(1, n));
      std::vector<IdSet> b(blocks);
      for (int x = 0; x < n; ++x) b[Pick(rng, 0, blocks - 1)].push_back(x);
      std::vector<IdSet> kept;
      std::vector<int> caps;
      for (auto& blk : b) {
        if (blk.empty()) continue;
        kept.push_back(blk);
        caps.push_back(Pick(rng, 0, static_cast<int>(blk.size())));
      }
      if (kept.empty()) return std::make_shared<UniformMatroid>(n, 0);
      return std::make_shared<PartitionMatroid>(kept, caps);
    }
    case 2: {
      const int nodes = Pick(rng, 2, std::max(2, n));
      std::vector<std::pair<int, int>> edges;
      for (int x = 0; x < n; ++x) {
        edges.emplace_back(Pick(rng, 0, nodes - 1), Pick(rng, 0, nodes - 1));
      }
      return std::make_shared<GraphicMatroid>(nodes, edges);
    }
    default: {
      // Truncation of a graphic matroid.
      const int nodes = Pick(rng, 2, std::max(2, n));
      std::vector<std::pair<int, int>> edges;
      for (int x = 0; x < n; ++x) {
        int u = Pick(rng, 0, nodes - 1);
        int v = Pick(rng, 0, nodes - 2);
        if (v >= u) ++v;
        edges.emplace_back(u, v);
      }
      MatroidPtr g = std::make_shared<GraphicMatroid>(nodes, edges);
      return Truncate(g, Pick(rng, 0, g->Rank()));
    }
  }
}

struct TestInstance {
  std::shared_ptr<KParityConstraint> c;
  ValueOraclePtr f;
  std::string family;
};

// Objective families: 0 modular, 1 coverage, 2 cut. Integer data only.
inline ValueOraclePtr RandomObjective(Rng& rng, int n, int family,
                                      bool allow_negative = true) {
  if (family == 0) {
    std::vector<double> w(n);
    for (auto& x : w) x = Pick(rng, allow_negative ? -3 : 1, 9);
    const double w0 = Coin(rng, 0.2) ? Pick(rng, 1, 4) : 0;
    return std::make_shared<ModularObjective>(w0, w);
  }
  if (family == 1) {
    const int items = Pick(rng, 2, n + 2);
    std::vector<double> iw(items);
    for (auto& x : iw) x = Pick(rng, 1, 9);
    std::vector<IdSet> cover(n);
    for (auto& s : cover) {
      const int m = Pick(rng, 0, std::min(3, items));
      auto p = Permutation(rng, items);
      s.assign(p.begin(), p.begin() + m);
      s = Normalize(s);
    }
    return std::make_shared<CoverageObjective>(iw, cover);
  }
  std::vector<WeightedLink> links;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (Coin(rng, 0.45)) links.push_back({u, v, double(Pick(rng, 1, 9))});
    }
  }
  return std::make_shared<CutObjective>(n, links);
}

// k-parity over a random matroid; edges are random disjoint groups of
// 1..k vertices.
inline TestInstance RandomInstance(std::uint64_t seed, int k, int num_edges,
                                   int family) {
  Rng rng(seed);
  std::vector<IdSet> edges;
  int nv = 0;
  for (int e = 0; e < num_edges; ++e) {
    const int size = Coin(rng, 0.7) ? k : Pick(rng, 1, k);
    IdSet verts;
    for (int j = 0; j < size; ++j) verts.push_back(nv++);
    edges.push_back(verts);
  }
  // Shuffle vertex names so edges are not contiguous.
  const auto perm = Permutation(rng, nv);
  for (auto& e : edges) {
    for (auto& v : e) v = perm[v];
    e = Normalize(e);
  }
  MatroidPtr m = RandomMatroid(rng, nv);
  TestInstance t;
  t.c = std::make_shared<KParityConstraint>(m, edges, k);
  t.f = RandomObjective(rng, num_edges, family);
  t.family = family == 0 ? "modular" : family == 1 ? "coverage" : "cut";
  return t;
}

// Feasible sets by exhaustive enumeration.
inline std::vector<IdSet> FeasibleSets(const KParityConstraint& c) {
  std::vector<IdSet> out;
  for (const auto& s : AllSubsets(c.num_edge_ids())) {
    if (c.Feasible(s)) out.push_back(s);
  }
  return out;
}

inline double BestSubsetValue(const ValueOracle& f, const IdSet& s) {
  double best = -INFINITY;
  const int n = static_cast<int>(s.size());
  for (const auto& mask : AllSubsets(n)) {
    IdSet sub;
    for (int i : mask) sub.push_back(s[i]);
    best = std::max(best, f.Value(sub));
  }
  return best;
}

}  // namespace subkp::testing

#endif  // SUBKP_TESTS_TEST_SUPPORT_H_
