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
#ifndef SUBKP_MATROID_H_
#define SUBKP_MATROID_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "subkp/report.h"
#include "subkp/sets.h"

namespace subkp {

// Independence oracle over a finite set of vertex ids.
//
// Concrete matroids own a dense ground 0..n-1. Derived views (restriction,
// contraction) keep the parent's ids, so their ground may be sparse. Oracles
// are immutable once built and may be queried from several threads.
class Matroid {
 public:
  virtual ~Matroid() = default;

  const IdSet& ground() const { return ground_; }
  int ground_size() const { return static_cast<int>(ground_.size()); }
  bool InGround(int v) const;

  // Order and duplicates in s are irrelevant. Throws InputError if some id
  // is outside ground().
  bool IsIndependent(std::span<const int> s) const;

  // Size of a largest independent subset of s, built greedily in ascending
  // id order.
  int Rank(std::span<const int> s) const;
  int Rank() const { return Rank(ground_); }

  // Same as IsIndependent but s must already be normalized and inside the
  // ground set. Used when composing oracles.
  virtual bool IndependentUnchecked(std::span<const int> s) const = 0;

  // Greedy maximal independent subset of s (ascending id order).
  IdSet GreedyBasis(std::span<const int> s) const;

 protected:
  explicit Matroid(IdSet ground);

 private:
  IdSet ground_;
  std::vector<char> member_;
};

using MatroidPtr = std::shared_ptr<const Matroid>;

class UniformMatroid final : public Matroid {
 public:
  UniformMatroid(int n, int rank);
  bool IndependentUnchecked(std::span<const int> s) const override;
  int rank_bound() const { return rank_; }

 private:
  int rank_;
};

// Blocks must be disjoint and cover 0..n-1 where n is the total block size.
class PartitionMatroid final : public Matroid {
 public:
  PartitionMatroid(std::vector<IdSet> blocks, std::vector<int> capacities);
  bool IndependentUnchecked(std::span<const int> s) const override;

  const std::vector<IdSet>& blocks() const { return blocks_; }
  const std::vector<int>& capacities() const { return capacities_; }

 private:
  std::vector<IdSet> blocks_;
  std::vector<int> capacities_;
  std::vector<int> block_of_;
};

// Cycle matroid of an undirected multigraph. Matroid vertex i is graph
// edge i; a set is independent iff its graph edges form a forest.
class GraphicMatroid final : public Matroid {
 public:
  GraphicMatroid(int num_nodes, std::vector<std::pair<int, int>> edges);
  bool IndependentUnchecked(std::span<const int> s) const override;

  int num_nodes() const { return num_nodes_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int num_nodes_;
  std::vector<std::pair<int, int>> edges_;
};

// Set system given by listing its independent sets. Ground size is capped at
// kMaxGround. With kValidate the list must be a matroid (non-empty,
// down-closed, augmentation); kRaw accepts any list so that CheckAxioms can
// be exercised on non-matroids.
class ExplicitMatroid final : public Matroid {
 public:
  static constexpr int kMaxGround = 20;
  enum class Validation { kValidate, kRaw };

  ExplicitMatroid(int n, const std::vector<IdSet>& independent,
                  Validation validation = Validation::kValidate);
  bool IndependentUnchecked(std::span<const int> s) const override;

  std::vector<IdSet> IndependentSets() const;

 private:
  std::vector<char> table_;
};

class RestrictedMatroid final : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr base, IdSet subset);
  bool IndependentUnchecked(std::span<const int> s) const override;

 private:
  MatroidPtr base_;
};

class ContractedMatroid final : public Matroid {
 public:
  // basis must be a maximal independent subset of contracted.
  ContractedMatroid(MatroidPtr base, IdSet contracted, IdSet basis);
  bool IndependentUnchecked(std::span<const int> s) const override;

  const IdSet& contracted() const { return contracted_; }
  const IdSet& basis() const { return basis_; }

 private:
  MatroidPtr base_;
  IdSet contracted_;
  IdSet basis_;
};

class TruncatedMatroid final : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr base, int rank);
  bool IndependentUnchecked(std::span<const int> s) const override;
  int rank_bound() const { return rank_; }

 private:
  MatroidPtr base_;
  int rank_;
};

// M|S: ground S, independent sets 2^S ∩ I.
MatroidPtr Restrict(MatroidPtr m, std::span<const int> subset);

// M/S with the maximal independent subset of S picked greedily by id.
MatroidPtr Contract(MatroidPtr m, std::span<const int> subset);

// M/S using a caller-chosen maximal independent subset of S. Throws
// InputError if basis is not one.
MatroidPtr ContractWithBasis(MatroidPtr m, std::span<const int> subset,
                             std::span<const int> basis);

// trunc(M, r). Throws InputError unless 0 <= r <= rank(M).
MatroidPtr Truncate(MatroidPtr m, int rank);

using AxiomReport = CheckReport;

inline constexpr int kMaxAxiomCheckGround = 16;

// Exhaustive check of non-emptiness, down-closedness and augmentation.
// Throws ScaleLimitError for grounds above kMaxAxiomCheckGround.
AxiomReport CheckAxioms(const Matroid& m, std::size_t max_violations = 16);

}  // namespace subkp

#endif  // SUBKP_MATROID_H_
