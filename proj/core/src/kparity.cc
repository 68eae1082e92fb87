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
#include "subkp/kparity.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "subkp/errors.h"

namespace subkp {
namespace {

IdSet AllIds(std::size_t n) {
  IdSet ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return ids;
}

bool HasDenseGround(const Matroid& m, int n) {
  if (m.ground_size() != n) return false;
  return n == 0 || (m.ground().front() == 0 && m.ground().back() == n - 1);
}

}  // namespace

KParityConstraint::KParityConstraint(MatroidPtr matroid,
                                     std::vector<IdSet> edges, int k)
    : matroid_(std::move(matroid)), k_(k) {
  if (!matroid_) throw InputError("k-parity constraint needs a matroid");
  if (k_ < 1) throw InputError("k must be positive");
  std::vector<char> used(matroid_->ground().empty()
                             ? 0
                             : matroid_->ground().back() + 1,
                         0);
  for (auto& e : edges) {
    const std::size_t raw = e.size();
    e = Normalize(std::move(e));
    if (e.size() != raw) throw InputError("edge lists a vertex twice");
    if (e.empty() || static_cast<int>(e.size()) > k_) {
      throw InputError("every edge must hold between 1 and k vertices");
    }
    for (int v : e) {
      if (!matroid_->InGround(v)) {
        throw InputError("edge vertex " + std::to_string(v) +
                         " is outside the matroid ground set");
      }
      if (used[v]) throw InputError("edges must be pairwise vertex-disjoint");
      used[v] = 1;
    }
  }
  ground_ = AllIds(edges.size());
  edges_ = std::make_shared<const std::vector<IdSet>>(std::move(edges));
  active_.assign(ground_.size(), 1);
}

KParityConstraint::KParityConstraint(
    MatroidPtr matroid, std::shared_ptr<const std::vector<IdSet>> edges, int k,
    IdSet ground)
    : matroid_(std::move(matroid)),
      edges_(std::move(edges)),
      k_(k),
      ground_(std::move(ground)) {
  active_.assign(edges_->size(), 0);
  for (int e : ground_) active_[e] = 1;
}

bool KParityConstraint::InGround(EdgeId e) const {
  return e >= 0 && e < static_cast<int>(active_.size()) && active_[e];
}

IdSet KParityConstraint::VerticesOf(std::span<const int> edges) const {
  IdSet out;
  for (int e : edges) {
    const IdSet& vs = (*edges_)[e];
    out.insert(out.end(), vs.begin(), vs.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool KParityConstraint::Feasible(std::span<const int> edges) const {
  for (int e : edges) {
    if (!InGround(e)) {
      throw InputError("edge " + std::to_string(e) +
                       " is not in the constraint ground set");
    }
  }
  const IdSet norm = Normalize(IdSet(edges.begin(), edges.end()));
  return FeasibleUnchecked(norm);
}

bool KParityConstraint::FeasibleUnchecked(std::span<const int> edges) const {
  return matroid_->IndependentUnchecked(VerticesOf(edges));
}

KParityConstraint KParityConstraint::RestrictGround(
    std::span<const int> subset) const {
  IdSet ground = Normalize(IdSet(subset.begin(), subset.end()));
  for (int e : ground) {
    if (!InGround(e)) {
      throw InputError("restricted ground must be a subset of the edges");
    }
  }
  return KParityConstraint(matroid_, edges_, k_, std::move(ground));
}

namespace {

int CommonGround(const std::vector<MatroidPtr>& factors) {
  if (factors.empty()) throw InputError("intersection of zero matroids");
  const int n = factors.front()->ground_size();
  for (const auto& m : factors) {
    if (!m || !HasDenseGround(*m, n)) {
      throw InputError("intersected matroids must share a dense ground set");
    }
  }
  return n;
}

}  // namespace

ProductMatroid::ProductMatroid(std::vector<MatroidPtr> factors)
    : Matroid(AllIds(static_cast<std::size_t>(CommonGround(factors)) *
                     factors.size())),
      factors_(std::move(factors)),
      element_count_(factors_.front()->ground_size()) {}

bool ProductMatroid::IndependentUnchecked(std::span<const int> s) const {
  const int k = num_factors();
  std::vector<IdSet> slices(k);
  for (int v : s) slices[v % k].push_back(v / k);
  for (int i = 0; i < k; ++i) {
    if (!factors_[i]->IndependentUnchecked(slices[i])) return false;
  }
  return true;
}

KParityConstraint FromIntersection(const std::vector<MatroidPtr>& matroids) {
  auto product = std::make_shared<ProductMatroid>(matroids);
  const int k = product->num_factors();
  std::vector<IdSet> edges(product->element_count());
  for (int x = 0; x < product->element_count(); ++x) {
    for (int i = 0; i < k; ++i) edges[x].push_back(x * k + i);
  }
  return KParityConstraint(std::move(product), std::move(edges), k);
}

}  // namespace subkp
