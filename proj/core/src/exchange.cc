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
#include "subkp/exchange.h"

#include <algorithm>
#include <functional>
#include <string>
#include <utility>

#include "subkp/errors.h"

namespace subkp {
namespace {

IdSet Sorted(std::span<const int> s) {
  return Normalize(IdSet(s.begin(), s.end()));
}

}  // namespace

BasePartition GreeneMagnanti(const Matroid& m, std::span<const int> s_in,
                             std::span<const int> t_in,
                             const std::vector<IdSet>& s_parts) {
  const IdSet s = Sorted(s_in);
  const IdSet t = Sorted(t_in);
  const int rank = m.Rank();
  if (!m.IsIndependent(s) || static_cast<int>(s.size()) != rank ||
      !m.IsIndependent(t) || static_cast<int>(t.size()) != rank) {
    throw InputError("GreeneMagnanti: S and T must be bases");
  }
  const int p = static_cast<int>(s_parts.size());
  if (static_cast<int>(t.size()) > kMaxExchangeBaseSize ||
      p > kMaxExchangeParts) {
    throw ScaleLimitError("GreeneMagnanti: brute force capped at |T| <= " +
                          std::to_string(kMaxExchangeBaseSize) +
                          " and parts <= " +
                          std::to_string(kMaxExchangeParts));
  }
  IdSet seen;
  std::vector<IdSet> rest(p);  // S \ S_i
  for (int i = 0; i < p; ++i) {
    const IdSet part = Sorted(s_parts[i]);
    if (!IsSubset(part, s) || !Disjoint(part, seen)) {
      throw InputError("GreeneMagnanti: parts must partition S");
    }
    seen = Union(seen, part);
    rest[i] = Difference(s, part);
  }
  if (seen != s) throw InputError("GreeneMagnanti: parts must cover S");

  const int n = static_cast<int>(t.size());
  std::vector<IdSet> current(rest);  // (S \ S_i) u T_i so far
  std::vector<IdSet> parts(p);
  auto deficit = [&]() {
    int total = 0;
    for (int i = 0; i < p; ++i) {
      total += rank - static_cast<int>(current[i].size());
    }
    return total;
  };

  // Each element of T adds at most one to a single part's set.
  std::function<bool(int)> assign = [&](int idx) -> bool {
    if (deficit() > n - idx) return false;
    if (idx == n) return true;
    const int x = t[idx];
    for (int i = 0; i < p; ++i) {
      IdSet next = With(current[i], x);
      if (!m.IndependentUnchecked(next)) continue;
      std::swap(current[i], next);
      parts[i].push_back(x);
      if (assign(idx + 1)) return true;
      parts[i].pop_back();
      std::swap(current[i], next);
    }
    return false;
  };
  if (n == 0 && p == 0) return {};
  if (!assign(0)) {
    throw InternalError(
        "GreeneMagnanti: no valid partition; the oracle is not a matroid");
  }
  return {std::move(parts)};
}

namespace {

// Adds elements of 'candidates' (ascending) to 'base' while independent,
// until 'needed' have been added.
IdSet Pad(const Matroid& m, const IdSet& base, const IdSet& candidates,
          std::size_t needed) {
  IdSet pad;
  IdSet cur = base;
  for (int v : candidates) {
    if (pad.size() == needed) break;
    IdSet next = With(cur, v);
    if (m.IndependentUnchecked(next)) {
      cur = std::move(next);
      pad.push_back(v);
    }
  }
  if (pad.size() != needed) {
    throw InternalError("exchange: augmentation failed; not a matroid");
  }
  return pad;
}

}  // namespace

namespace {

ExchangeStructure BuildCharged(const KParityConstraint& c, const IdSet& a,
                               const IdSet& b) {
  ExchangeStructure out;
  const IdSet common = Intersection(a, b);
  for (int e : common) out.n[e] = {e};
  const IdSet a_only = Difference(a, common);
  const IdSet b_only = Difference(b, common);
  if (b_only.empty()) return out;

  MatroidPtr m = c.matroid();
  if (!common.empty()) m = Contract(m, c.VerticesOf(common));

  const IdSet va = c.VerticesOf(a_only);
  const IdSet vb = c.VerticesOf(b_only);
  IdSet pad;
  if (va.size() <= vb.size()) {
    pad = Pad(*m, va, Difference(vb, va), vb.size() - va.size());
  } else {
    pad = Pad(*m, vb, Difference(va, vb), va.size() - vb.size());
  }
  const IdSet bar_a = Difference(va, pad);
  const IdSet bar_b = Difference(vb, pad);
  if (bar_a.size() != bar_b.size()) {
    throw InternalError("exchange: padded sides differ in size");
  }
  MatroidPtr bar = Truncate(Contract(Restrict(m, Union(va, vb)), pad),
                            static_cast<int>(bar_a.size()));

  std::vector<IdSet> s_parts;
  s_parts.reserve(a_only.size());
  for (int e : a_only) s_parts.push_back(Difference(c.vertices(e), pad));
  const BasePartition pi = GreeneMagnanti(*bar, bar_a, bar_b, s_parts);

  for (int e : b_only) {
    const IdSet vbar = Difference(c.vertices(e), pad);
    IdSet& ne = out.n[e];
    for (std::size_t i = 0; i < a_only.size(); ++i) {
      if (!Disjoint(pi.parts[i], vbar)) ne.push_back(a_only[i]);
    }
  }
  return out;
}

}  // namespace

// Edges of B that fit next to A (greedily, ascending id) charge nothing.
// The rest is charged against A plus those free edges; since the free edges
// lie in B they only ever point at themselves there.
ExchangeStructure BuildExchangeStructure(const KParityConstraint& c,
                                         std::span<const int> a_in,
                                         std::span<const int> b_in) {
  const IdSet a = Sorted(a_in);
  const IdSet b = Sorted(b_in);
  if (!c.Feasible(a) || !c.Feasible(b)) {
    throw InputError("exchange: A and B must be feasible");
  }
  IdSet grown = a;
  IdSet free_edges;
  for (int e : Difference(b, a)) {
    IdSet next = With(grown, e);
    if (c.FeasibleUnchecked(next)) {
      grown = std::move(next);
      free_edges.push_back(e);
    }
  }
  ExchangeStructure out = BuildCharged(c, grown, b);
  for (int e : free_edges) out.n[e].clear();
  return out;
}

CheckReport CheckExchangeClaims(const KParityConstraint& c,
                                std::span<const int> a_in,
                                std::span<const int> b_in,
                                const ExchangeStructure& x) {
  const IdSet a = Sorted(a_in);
  const IdSet b = Sorted(b_in);
  CheckReport report;
  auto fail = [&](std::string what) {
    report.ok = false;
    report.violations.push_back(std::move(what));
  };
  auto n_of = [&](int e) -> const IdSet* {
    auto it = x.n.find(e);
    return it == x.n.end() ? nullptr : &it->second;
  };

  const IdSet a_minus_b = Difference(a, b);
  for (int e : b) {
    const IdSet* ne = n_of(e);
    if (!ne) {
      fail("claim 1: no N_b for b=" + std::to_string(e));
      continue;
    }
    if (Contains(a, e)) {
      if (*ne != IdSet{e}) {
        fail("claim 1: b=" + std::to_string(e) + " in A∩B but N_b=" +
             ToString(*ne));
      }
    } else if (!IsSubset(*ne, a_minus_b)) {
      fail("claim 1: N_b=" + ToString(*ne) + " not inside A\\B for b=" +
           std::to_string(e));
    }
  }
  if (!report.ok) return report;

  IdSet free_b;
  for (int e : b) {
    if (n_of(e)->empty()) free_b.push_back(e);
  }
  if (!c.FeasibleUnchecked(Union(a, free_b))) {
    fail("claim 2: A u " + ToString(free_b) + " infeasible");
  }
  for (int ea : a) {
    IdSet single;
    int hits = 0;
    for (int e : b) {
      const IdSet& ne = *n_of(e);
      if (ne == IdSet{ea}) single.push_back(e);
      if (Contains(ne, ea)) ++hits;
    }
    if (!c.FeasibleUnchecked(Union(Without(a, ea), single))) {
      fail("claim 3: (A - " + std::to_string(ea) + ") u " +
           ToString(single) + " infeasible");
    }
    if (hits > c.k()) {
      fail("claim 4: a=" + std::to_string(ea) + " appears in " +
           std::to_string(hits) + " > k sets");
    }
  }
  return report;
}

}  // namespace subkp
