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
#include "subkp/objective.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <utility>

#include "subkp/errors.h"

namespace subkp {

std::string ToString(ObjectiveClass c) {
  switch (c) {
    case ObjectiveClass::kLinear:
      return "linear";
    case ObjectiveClass::kMonotoneSubmodular:
      return "monotone-submodular";
    case ObjectiveClass::kSubmodular:
      return "submodular";
  }
  return "unknown";
}

ValueOracle::ValueOracle(int ground_size, ObjectiveClass c)
    : ground_size_(ground_size), class_(c) {
  if (ground_size < 0) throw InputError("negative objective ground size");
}

double ValueOracle::Value(std::span<const int> s) const {
  for (int e : s) {
    if (e < 0 || e >= ground_size_) {
      throw InputError("edge " + std::to_string(e) +
                       " is outside the objective ground set");
    }
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  if (IsNormalized(s)) return Evaluate(s);
  const IdSet norm = Normalize(IdSet(s.begin(), s.end()));
  return Evaluate(norm);
}

double ValueOracle::Marginal(EdgeId e, std::span<const int> s) const {
  const IdSet base = Normalize(IdSet(s.begin(), s.end()));
  return Value(With(base, e)) - Value(base);
}

double ValueOracle::MarginalSet(std::span<const int> t,
                                std::span<const int> s) const {
  const IdSet base = Normalize(IdSet(s.begin(), s.end()));
  const IdSet add = Normalize(IdSet(t.begin(), t.end()));
  return Value(Union(base, add)) - Value(base);
}

namespace {

ObjectiveClass ModularClass(double w0, const std::vector<double>& w) {
  if (w0 == 0.0) return ObjectiveClass::kLinear;
  const bool nonneg =
      std::all_of(w.begin(), w.end(), [](double x) { return x >= 0.0; });
  return nonneg ? ObjectiveClass::kMonotoneSubmodular
                : ObjectiveClass::kSubmodular;
}

}  // namespace

ModularObjective::ModularObjective(double w0, std::vector<double> weights)
    : ValueOracle(static_cast<int>(weights.size()), ModularClass(w0, weights)),
      w0_(w0),
      weights_(std::move(weights)) {
  if (w0_ < 0.0) throw InputError("modular objective needs w0 >= 0");
}

double ModularObjective::Evaluate(std::span<const int> s) const {
  double total = w0_;
  for (int e : s) total += weights_[e];
  return total;
}

CoverageObjective::CoverageObjective(std::vector<double> item_weights,
                                     std::vector<IdSet> edge_items)
    : ValueOracle(static_cast<int>(edge_items.size()),
                  ObjectiveClass::kMonotoneSubmodular),
      item_weights_(std::move(item_weights)),
      edge_items_(std::move(edge_items)) {
  for (double w : item_weights_) {
    if (!(w >= 0.0)) throw InputError("coverage item weights must be >= 0");
  }
  const int items = static_cast<int>(item_weights_.size());
  for (auto& list : edge_items_) {
    list = Normalize(std::move(list));
    for (int u : list) {
      if (u < 0 || u >= items) throw InputError("coverage item out of range");
    }
  }
}

double CoverageObjective::Evaluate(std::span<const int> s) const {
  std::vector<char> covered(item_weights_.size(), 0);
  double total = 0.0;
  for (int e : s) {
    for (int u : edge_items_[e]) {
      if (!covered[u]) {
        covered[u] = 1;
        total += item_weights_[u];
      }
    }
  }
  return total;
}

CutObjective::CutObjective(int num_nodes, std::vector<WeightedLink> links)
    : ValueOracle(num_nodes, ObjectiveClass::kSubmodular),
      links_(std::move(links)) {
  for (const auto& l : links_) {
    if (l.u < 0 || l.v < 0 || l.u >= num_nodes || l.v >= num_nodes) {
      throw InputError("cut link endpoint out of range");
    }
    if (!(l.weight >= 0.0)) throw InputError("cut weights must be >= 0");
  }
}

double CutObjective::Evaluate(std::span<const int> s) const {
  double total = 0.0;
  for (const auto& l : links_) {
    if (Contains(s, l.u) != Contains(s, l.v)) total += l.weight;
  }
  return total;
}

namespace {

std::vector<double> ValueTable(const ValueOracle& f,
                               std::span<const int> ground) {
  if (static_cast<int>(ground.size()) > kMaxSetFunctionCheckGround) {
    throw ScaleLimitError("set-function checks are exhaustive; ground size " +
                          std::to_string(ground.size()) + " exceeds " +
                          std::to_string(kMaxSetFunctionCheckGround));
  }
  std::vector<double> table(std::size_t{1} << ground.size());
  for (std::size_t mask = 0; mask < table.size(); ++mask) {
    table[mask] = f.Value(FromMask(ground, mask));
  }
  return table;
}

}  // namespace

CheckReport CheckSubmodular(const ValueOracle& f, std::span<const int> ground,
                            std::size_t max_violations) {
  const IdSet g = Normalize(IdSet(ground.begin(), ground.end()));
  const auto table = ValueTable(f, g);
  const std::uint32_t full = static_cast<std::uint32_t>(table.size() - 1);
  CheckReport report;
  for (std::uint32_t t = 0;; ++t) {
    // Enumerate every S ⊆ T (including S = T) and every e ∉ T.
    for (std::uint32_t s = t;; s = (s - 1) & t) {
      for (std::uint32_t rest = full & ~t; rest; rest &= rest - 1) {
        const std::uint32_t bit = rest & (~rest + 1);
        const double ms = table[s | bit] - table[s];
        const double mt = table[t | bit] - table[t];
        if (ms < mt) {
          report.ok = false;
          if (report.violations.size() < max_violations) {
            report.violations.push_back(
                "f(e|S) < f(e|T) for e=" +
                ToString(FromMask(g, bit)) + " S=" +
                ToString(FromMask(g, s)) + " T=" + ToString(FromMask(g, t)));
          }
        }
      }
      if (s == 0) break;
    }
    if (t == full) break;
  }
  return report;
}

CheckReport CheckMonotone(const ValueOracle& f, std::span<const int> ground,
                          std::size_t max_violations) {
  const IdSet g = Normalize(IdSet(ground.begin(), ground.end()));
  const auto table = ValueTable(f, g);
  const std::uint32_t full = static_cast<std::uint32_t>(table.size() - 1);
  CheckReport report;
  for (std::uint32_t s = 0;; ++s) {
    for (std::uint32_t rest = full & ~s; rest; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (table[s | bit] - table[s] < 0.0) {
        report.ok = false;
        if (report.violations.size() < max_violations) {
          report.violations.push_back("f(e|S) < 0 for e=" +
                                      ToString(FromMask(g, bit)) +
                                      " S=" + ToString(FromMask(g, s)));
        }
      }
    }
    if (s == full) break;
  }
  return report;
}

}  // namespace subkp
