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
#ifndef SUBKP_KPARITY_H_
#define SUBKP_KPARITY_H_

#include <memory>
#include <span>
#include <vector>

#include "subkp/matroid.h"
#include "subkp/sets.h"

namespace subkp {

// Matroid k-parity constraint: a matroid on vertices plus a family of
// pairwise-disjoint edges, each holding 1..k vertices. An edge set is
// feasible iff the union of its vertices is independent.
//
// Edge ids index a shared edge table. Restricting the ground keeps ids
// stable, so ground() may be a sparse subset of 0..num_edge_ids()-1.
class KParityConstraint {
 public:
  KParityConstraint(MatroidPtr matroid, std::vector<IdSet> edges, int k);

  const MatroidPtr& matroid() const { return matroid_; }
  int k() const { return k_; }
  int num_edge_ids() const { return static_cast<int>(edges_->size()); }
  const IdSet& ground() const { return ground_; }
  bool InGround(EdgeId e) const;

  const IdSet& vertices(EdgeId e) const { return (*edges_)[e]; }
  // v(S): union of the vertex sets of the given edges.
  IdSet VerticesOf(std::span<const int> edges) const;

  // Throws InputError for ids outside ground().
  bool Feasible(std::span<const int> edges) const;
  // edges must be normalized and inside ground().
  bool FeasibleUnchecked(std::span<const int> edges) const;

  // Same matroid and edge table, ground narrowed to 'subset'.
  KParityConstraint RestrictGround(std::span<const int> subset) const;

 private:
  KParityConstraint(MatroidPtr matroid,
                    std::shared_ptr<const std::vector<IdSet>> edges, int k,
                    IdSet ground);

  MatroidPtr matroid_;
  std::shared_ptr<const std::vector<IdSet>> edges_;
  int k_;
  IdSet ground_;
  std::vector<char> active_;
};

// Matroid on X x [k]; vertex (x, i) has id x*k + i. A vertex set is
// independent iff for every i its i-th slice is independent in matroid i.
class ProductMatroid final : public Matroid {
 public:
  explicit ProductMatroid(std::vector<MatroidPtr> factors);
  bool IndependentUnchecked(std::span<const int> s) const override;

  int num_factors() const { return static_cast<int>(factors_.size()); }
  int element_count() const { return element_count_; }

 private:
  std::vector<MatroidPtr> factors_;
  int element_count_;
};

// k-matroid intersection as a k-parity constraint: one edge per ground
// element x with vertices {(x,0), ..., (x,k-1)}. All matroids must share the
// dense ground 0..|X|-1.
KParityConstraint FromIntersection(const std::vector<MatroidPtr>& matroids);

}  // namespace subkp

#endif  // SUBKP_KPARITY_H_
