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
#ifndef SUBKP_EXCHANGE_H_
#define SUBKP_EXCHANGE_H_

// Desk-scale constructive exchange arguments. Nothing here is used by the
// solver itself; the analysis module relies on it to rebuild the charging
// structure of a finished run.

#include <map>
#include <span>
#include <vector>

#include "subkp/kparity.h"
#include "subkp/matroid.h"
#include "subkp/report.h"
#include "subkp/sets.h"

namespace subkp {

inline constexpr int kMaxExchangeBaseSize = 12;
inline constexpr int kMaxExchangeParts = 16;

// parts[i] is T_i, matched with the i-th part of S.
struct BasePartition {
  std::vector<IdSet> parts;
};

// Given bases S, T of m and a partition of S, returns a partition T_i of T
// such that (S \ S_i) u T_i is a base for every i. The search walks
// assignments of T's elements (ascending) to part indices in lexicographic
// order and returns the first valid one.
//
// Throws InputError on malformed input, ScaleLimitError when |T| or the
// number of parts exceeds the caps above, and InternalError when no valid
// partition exists (impossible for a genuine matroid).
BasePartition GreeneMagnanti(const Matroid& m, std::span<const int> s,
                             std::span<const int> t,
                             const std::vector<IdSet>& s_parts);

// N_b ⊆ A for every b in B, keyed by b.
struct ExchangeStructure {
  std::map<EdgeId, IdSet> n;
};

// Builds the exchange collection for two feasible edge sets of c:
//  1. b in A∩B gets N_b = {b}; b in B\A gets N_b ⊆ A\B.
//  2. A u {b : N_b = ∅} is feasible.
//  3. (A - a) u {b : N_b = {a}} is feasible for every a in A.
//  4. every a in A lies in at most k of the N_b.
// Common edges are contracted away first; the disjoint remainder is padded
// to equal size, contracted and truncated, and split with GreeneMagnanti.
ExchangeStructure BuildExchangeStructure(const KParityConstraint& c,
                                         std::span<const int> a,
                                         std::span<const int> b);

// Checks the four properties above for an arbitrary collection.
CheckReport CheckExchangeClaims(const KParityConstraint& c,
                                std::span<const int> a, std::span<const int> b,
                                const ExchangeStructure& x);

}  // namespace subkp

#endif  // SUBKP_EXCHANGE_H_
