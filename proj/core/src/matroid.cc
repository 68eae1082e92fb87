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

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <utility>

#include "subkp/errors.h"

namespace subkp {
namespace {

IdSet DenseGround(int n) {
  if (n < 0) throw InputError("ground size must be non-negative");
  IdSet g(n);
  std::iota(g.begin(), g.end(), 0);
  return g;
}

std::string MaskString(std::span<const int> ground, std::uint32_t mask) {
  return ToString(FromMask(ground, mask));
}

// table[mask] says whether the subset of 'ground' selected by mask is
// independent. Appends human-readable violations to report.
void CheckTable(std::span<const int> ground, const std::vector<char>& table,
                std::size_t max_violations, AxiomReport& report) {
  const int n = static_cast<int>(ground.size());
  const std::uint32_t full = n == 0 ? 0u : (n == 32 ? ~0u : (1u << n) - 1);
  auto add = [&](std::string v) {
    report.ok = false;
    if (report.violations.size() < max_violations) {
      report.violations.push_back(std::move(v));
    }
  };

  if (!table[0]) add("empty set is not independent");

  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    if (!table[mask]) continue;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (!table[mask ^ bit]) {
        add("down-closedness: " + MaskString(ground, mask) +
            " independent but " + MaskString(ground, mask ^ bit) + " is not");
        break;
      }
    }
  }

  // best[mask] = size of a largest independent subset of mask. Augmentation
  // fails for an independent S iff some independent T with |T| > |S| lies
  // inside S plus the elements that cannot be added to S.
  std::vector<std::uint8_t> best(std::size_t{full} + 1, 0);
  for (std::uint32_t mask = 0;; ++mask) {
    if (table[mask]) {
      best[mask] = static_cast<std::uint8_t>(std::popcount(mask));
    } else {
      std::uint8_t b = 0;
      for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        b = std::max(b, best[mask ^ bit]);
      }
      best[mask] = b;
    }
    if (mask == full) break;
  }
  for (std::uint32_t s = 0;; ++s) {
    if (table[s]) {
      std::uint32_t blocked = s;
      for (int e = 0; e < n; ++e) {
        const std::uint32_t bit = 1u << e;
        if (!(s & bit) && !table[s | bit]) blocked |= bit;
      }
      const int size = std::popcount(s);
      if (best[blocked] > size) {
        // Walk down to an independent witness inside 'blocked'.
        std::uint32_t t = blocked;
        while (!table[t]) {
          for (std::uint32_t rest = t; rest; rest &= rest - 1) {
            const std::uint32_t bit = rest & (~rest + 1);
            if (best[t ^ bit] == best[t]) {
              t ^= bit;
              break;
            }
          }
        }
        add("augmentation: no element of " + MaskString(ground, t & ~s) +
            " extends " + MaskString(ground, s) + " although " +
            MaskString(ground, t) + " is larger");
      }
    }
    if (s == full) break;
  }
}

}  // namespace

Matroid::Matroid(IdSet ground) : ground_(Normalize(std::move(ground))) {
  if (!ground_.empty() && ground_.front() < 0) {
    throw InputError("vertex ids must be non-negative");
  }
  member_.assign(ground_.empty() ? 0 : ground_.back() + 1, 0);
  for (int v : ground_) member_[v] = 1;
}

bool Matroid::InGround(int v) const {
  return v >= 0 && v < static_cast<int>(member_.size()) && member_[v];
}

bool Matroid::IsIndependent(std::span<const int> s) const {
  for (int v : s) {
    if (!InGround(v)) {
      throw InputError("vertex " + std::to_string(v) +
                       " is outside the matroid ground set");
    }
  }
  if (IsNormalized(s)) return IndependentUnchecked(s);
  const IdSet norm = Normalize(IdSet(s.begin(), s.end()));
  return IndependentUnchecked(norm);
}

IdSet Matroid::GreedyBasis(std::span<const int> s) const {
  IdSet sorted = Normalize(IdSet(s.begin(), s.end()));
  for (int v : sorted) {
    if (!InGround(v)) {
      throw InputError("vertex " + std::to_string(v) +
                       " is outside the matroid ground set");
    }
  }
  IdSet basis;
  for (int v : sorted) {
    basis.push_back(v);
    if (!IndependentUnchecked(basis)) basis.pop_back();
  }
  return basis;
}

int Matroid::Rank(std::span<const int> s) const {
  return static_cast<int>(GreedyBasis(s).size());
}

UniformMatroid::UniformMatroid(int n, int rank)
    : Matroid(DenseGround(n)), rank_(rank) {
  if (rank < 0 || rank > n) throw InputError("uniform matroid needs 0<=r<=n");
}

bool UniformMatroid::IndependentUnchecked(std::span<const int> s) const {
  return static_cast<int>(s.size()) <= rank_;
}

namespace {

int TotalSize(const std::vector<IdSet>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return static_cast<int>(n);
}

}  // namespace

PartitionMatroid::PartitionMatroid(std::vector<IdSet> blocks,
                                   std::vector<int> capacities)
    : Matroid(DenseGround(TotalSize(blocks))),
      blocks_(std::move(blocks)),
      capacities_(std::move(capacities)) {
  if (blocks_.size() != capacities_.size()) {
    throw InputError("partition matroid: one capacity per block required");
  }
  const int n = ground_size();
  block_of_.assign(n, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (capacities_[b] < 0) throw InputError("negative block capacity");
    blocks_[b] = Normalize(std::move(blocks_[b]));
    for (int v : blocks_[b]) {
      if (v < 0 || v >= n || block_of_[v] != -1) {
        throw InputError("partition blocks must be disjoint and cover 0..n-1");
      }
      block_of_[v] = static_cast<int>(b);
    }
  }
  if (std::find(block_of_.begin(), block_of_.end(), -1) != block_of_.end()) {
    throw InputError("partition blocks must be disjoint and cover 0..n-1");
  }
}

bool PartitionMatroid::IndependentUnchecked(std::span<const int> s) const {
  std::vector<int> used(blocks_.size(), 0);
  for (int v : s) {
    const int b = block_of_[v];
    if (++used[b] > capacities_[b]) return false;
  }
  return true;
}

GraphicMatroid::GraphicMatroid(int num_nodes,
                               std::vector<std::pair<int, int>> edges)
    : Matroid(DenseGround(static_cast<int>(edges.size()))),
      num_nodes_(num_nodes),
      edges_(std::move(edges)) {
  for (const auto& [u, v] : edges_) {
    if (u < 0 || v < 0 || u >= num_nodes_ || v >= num_nodes_) {
      throw InputError("graphic matroid: edge endpoint out of range");
    }
  }
}

bool GraphicMatroid::IndependentUnchecked(std::span<const int> s) const {
  std::vector<int> parent(num_nodes_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int e : s) {
    const int a = find(edges_[e].first);
    const int b = find(edges_[e].second);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

ExplicitMatroid::ExplicitMatroid(int n, const std::vector<IdSet>& independent,
                                 Validation validation)
    : Matroid(DenseGround(n)) {
  if (n > kMaxGround) {
    throw ScaleLimitError("explicit matroid ground size capped at " +
                          std::to_string(kMaxGround));
  }
  table_.assign(std::size_t{1} << n, 0);
  for (const IdSet& s : independent) {
    std::uint32_t mask = 0;
    for (int v : s) {
      if (v < 0 || v >= n) throw InputError("explicit set id out of range");
      mask |= 1u << v;
    }
    table_[mask] = 1;
  }
  if (validation == Validation::kValidate) {
    AxiomReport report;
    CheckTable(ground(), table_, 1, report);
    if (!report.ok) {
      throw InputError("explicit set system is not a matroid: " +
                       report.violations.front());
    }
  }
}

bool ExplicitMatroid::IndependentUnchecked(std::span<const int> s) const {
  std::uint32_t mask = 0;
  for (int v : s) mask |= 1u << v;
  return table_[mask] != 0;
}

std::vector<IdSet> ExplicitMatroid::IndependentSets() const {
  std::vector<IdSet> out;
  for (std::size_t mask = 0; mask < table_.size(); ++mask) {
    if (table_[mask]) out.push_back(FromMask(ground(), mask));
  }
  return out;
}

RestrictedMatroid::RestrictedMatroid(MatroidPtr base, IdSet subset)
    : Matroid(std::move(subset)), base_(std::move(base)) {
  for (int v : ground()) {
    if (!base_->InGround(v)) {
      throw InputError("restriction set must lie in the ground set");
    }
  }
}

bool RestrictedMatroid::IndependentUnchecked(std::span<const int> s) const {
  return base_->IndependentUnchecked(s);
}

ContractedMatroid::ContractedMatroid(MatroidPtr base, IdSet contracted,
                                     IdSet basis)
    : Matroid(Difference(base->ground(), Normalize(contracted))),
      base_(std::move(base)),
      contracted_(Normalize(std::move(contracted))),
      basis_(Normalize(std::move(basis))) {
  for (int v : contracted_) {
    if (!base_->InGround(v)) {
      throw InputError("contraction set must lie in the ground set");
    }
  }
  if (!IsSubset(basis_, contracted_) ||
      !base_->IndependentUnchecked(basis_)) {
    throw InputError("contraction basis must be an independent subset");
  }
  for (int v : Difference(contracted_, basis_)) {
    if (base_->IndependentUnchecked(With(basis_, v))) {
      throw InputError("contraction basis is not maximal");
    }
  }
}

bool ContractedMatroid::IndependentUnchecked(std::span<const int> s) const {
  return base_->IndependentUnchecked(Union(s, basis_));
}

TruncatedMatroid::TruncatedMatroid(MatroidPtr base, int rank)
    : Matroid(base->ground()), base_(std::move(base)), rank_(rank) {
  if (rank_ < 0 || rank_ > base_->Rank()) {
    throw InputError("truncation rank must lie in [0, rank(M)]");
  }
}

bool TruncatedMatroid::IndependentUnchecked(std::span<const int> s) const {
  return static_cast<int>(s.size()) <= rank_ && base_->IndependentUnchecked(s);
}

MatroidPtr Restrict(MatroidPtr m, std::span<const int> subset) {
  return std::make_shared<RestrictedMatroid>(
      std::move(m), Normalize(IdSet(subset.begin(), subset.end())));
}

MatroidPtr Contract(MatroidPtr m, std::span<const int> subset) {
  IdSet basis = m->GreedyBasis(subset);
  return std::make_shared<ContractedMatroid>(
      std::move(m), IdSet(subset.begin(), subset.end()), std::move(basis));
}

MatroidPtr ContractWithBasis(MatroidPtr m, std::span<const int> subset,
                             std::span<const int> basis) {
  return std::make_shared<ContractedMatroid>(
      std::move(m), IdSet(subset.begin(), subset.end()),
      IdSet(basis.begin(), basis.end()));
}

MatroidPtr Truncate(MatroidPtr m, int rank) {
  return std::make_shared<TruncatedMatroid>(std::move(m), rank);
}

AxiomReport CheckAxioms(const Matroid& m, std::size_t max_violations) {
  const int n = m.ground_size();
  if (n > kMaxAxiomCheckGround) {
    throw ScaleLimitError("axiom check is exhaustive; ground size " +
                          std::to_string(n) + " exceeds " +
                          std::to_string(kMaxAxiomCheckGround));
  }
  std::vector<char> table(std::size_t{1} << n, 0);
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = m.IndependentUnchecked(FromMask(m.ground(), mask)) ? 1 : 0;
  }
  AxiomReport report;
  CheckTable(m.ground(), table, max_violations, report);
  return report;
}

}  // namespace subkp
