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
#ifndef SUBKP_OBJECTIVE_H_
#define SUBKP_OBJECTIVE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "subkp/report.h"
#include "subkp/sets.h"

namespace subkp {

enum class ObjectiveClass { kLinear, kMonotoneSubmodular, kSubmodular };

std::string ToString(ObjectiveClass c);

// Value oracle f: 2^E -> R over edge ids 0..ground_size()-1.
//
// Evaluations are pure. Every call through Value() bumps an atomic query
// counter, so one oracle may be shared by concurrent runs.
class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  int ground_size() const { return ground_size_; }
  ObjectiveClass declared_class() const { return class_; }

  // Throws InputError for ids outside the ground set.
  double Value(std::span<const int> s) const;
  // f(e | S) = f(S + e) - f(S).
  double Marginal(EdgeId e, std::span<const int> s) const;
  // f(T | S) = f(S u T) - f(S).
  double MarginalSet(std::span<const int> t, std::span<const int> s) const;

  std::uint64_t queries() const { return queries_.load(); }

  // s must be normalized and inside the ground set.
  virtual double Evaluate(std::span<const int> s) const = 0;

 protected:
  ValueOracle(int ground_size, ObjectiveClass c);

 private:
  int ground_size_;
  ObjectiveClass class_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

using ValueOraclePtr = std::shared_ptr<const ValueOracle>;

// f(S) = w0 + sum of weights. Declared linear when w0 == 0.
class ModularObjective final : public ValueOracle {
 public:
  ModularObjective(double w0, std::vector<double> weights);
  double Evaluate(std::span<const int> s) const override;

  double w0() const { return w0_; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  double w0_;
  std::vector<double> weights_;
};

// f(S) = total weight of the items covered by the edges in S.
class CoverageObjective final : public ValueOracle {
 public:
  CoverageObjective(std::vector<double> item_weights,
                    std::vector<IdSet> edge_items);
  double Evaluate(std::span<const int> s) const override;

  const std::vector<double>& item_weights() const { return item_weights_; }
  const std::vector<IdSet>& edge_items() const { return edge_items_; }

 private:
  std::vector<double> item_weights_;
  std::vector<IdSet> edge_items_;
};

struct WeightedLink {
  int u;
  int v;
  double weight;
};

// Undirected cut function on a graph whose nodes are the edge ids:
// f(S) = total weight of links with exactly one endpoint in S.
class CutObjective final : public ValueOracle {
 public:
  CutObjective(int num_nodes, std::vector<WeightedLink> links);
  double Evaluate(std::span<const int> s) const override;

  const std::vector<WeightedLink>& links() const { return links_; }

 private:
  std::vector<WeightedLink> links_;
};

inline constexpr int kMaxSetFunctionCheckGround = 14;

// Exhaustive checks of f(e|S) >= f(e|T) for S ⊆ T ⊆ E, e ∉ T, and of
// f(e|S) >= 0, over the given ground. Throws ScaleLimitError above
// kMaxSetFunctionCheckGround elements.
CheckReport CheckSubmodular(const ValueOracle& f, std::span<const int> ground,
                            std::size_t max_violations = 16);
CheckReport CheckMonotone(const ValueOracle& f, std::span<const int> ground,
                          std::size_t max_violations = 16);

}  // namespace subkp

#endif  // SUBKP_OBJECTIVE_H_
