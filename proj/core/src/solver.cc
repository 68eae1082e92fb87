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
#include "subkp/solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "subkp/errors.h"
#include "subkp/random.h"

namespace subkp {

double Thresholds::tau() const { return std::exp2(alpha); }

double Thresholds::m(int i) const { return std::ldexp(W * tau(), -i); }

std::vector<const IterationRecord*> RunTrace::NonEmptyIterations() const {
  std::vector<const IterationRecord*> out;
  for (const auto& it : iterations) {
    if (!it.final_set.empty()) out.push_back(&it);
  }
  return out;
}

double ComputeW(const ValueOracle& f, std::span<const int> edges) {
  double w = -std::numeric_limits<double>::infinity();
  const double empty = f.Value({});
  for (int e : edges) {
    const int single[] = {e};
    w = std::max(w, f.Value(single) - empty);
  }
  return w;
}

std::pair<double, double> AlphaFromUniform(double u) {
  if (!(u >= 0.0 && u < 1.0)) throw InputError("U must lie in [0, 1)");
  const double alpha = 1.0 - u;
  return {alpha, std::exp2(alpha)};
}

std::pair<double, double> SampleAlpha(std::uint64_t seed) {
  Rng rng(seed);
  return AlphaFromUniform(rng.Uniform());
}

int FastForward(double W, double tau, double w) {
  if (!(w > 0.0)) throw InputError("fast-forward needs a positive marginal");
  if (w > W) throw InputError("fast-forward needs w <= W");
  const double base = W * tau;
  int i = static_cast<int>(std::ceil(std::log2(base) - std::log2(w)));
  auto m = [&](int j) { return std::ldexp(base, -j); };
  while (m(i) > w) ++i;
  while (m(i - 1) <= w) --i;
  return i;
}

double ImprovementBudget(double epsilon, std::size_t num_edges) {
  return (1.0 + 2.0 / epsilon) * static_cast<double>(num_edges);
}

namespace {

// Per-run view of the oracles that tallies the calls made by this run only.
class Session {
 public:
  Session(const ValueOracle& f, const KParityConstraint& c) : f_(f), c_(c) {}

  double Value(std::span<const int> s) {
    ++value_calls;
    return f_.Value(s);
  }
  bool Feasible(std::span<const int> s) {
    ++feasibility_calls;
    return c_.FeasibleUnchecked(s);
  }
  const KParityConstraint& constraint() const { return c_; }

  std::uint64_t value_calls = 0;
  std::uint64_t feasibility_calls = 0;

 private:
  const ValueOracle& f_;
  const KParityConstraint& c_;
};

std::optional<Improvement> Scan(Session& s, const IdSet& a_prev,
                                const IdSet& a_cur, double theta,
                                double epsilon) {
  const IdSet a = Union(a_prev, a_cur);
  const double fa = s.Value(a);
  const IdSet candidates = Difference(s.constraint().ground(), a);
  std::vector<double> with(candidates.size());  // f(A + x)
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    with[i] = s.Value(With(a, candidates[i]));
  }
  auto gain = [&](std::size_t i) { return with[i] - fa; };

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (gain(i) >= theta && s.Feasible(With(a, candidates[i]))) {
      return Improvement{ImprovementKind::kAdd, {candidates[i]}, {}};
    }
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!(gain(i) >= theta)) continue;
    const IdSet plus = With(a, candidates[i]);
    for (int y : a_cur) {
      const IdSet swapped = Without(plus, y);
      if (s.Value(swapped) >= fa + epsilon * theta && s.Feasible(swapped)) {
        return Improvement{ImprovementKind::kSwap, {candidates[i]}, {y}};
      }
    }
  }

  if (a_cur.empty()) return std::nullopt;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      if (!(gain(i) >= theta) && !(gain(j) >= theta)) continue;
      const IdSet both = With(With(a, candidates[i]), candidates[j]);
      const double f_both = s.Value(both);
      std::vector<EdgeId> label;
      if (gain(i) >= theta && f_both - with[i] >= theta) {
        label = {candidates[i], candidates[j]};
      } else if (gain(j) >= theta && f_both - with[j] >= theta) {
        label = {candidates[j], candidates[i]};
      } else {
        continue;
      }
      for (int y : a_cur) {
        if (s.Feasible(Without(both, y))) {
          return Improvement{ImprovementKind::kDoubleAdd, std::move(label),
                             {y}};
        }
      }
    }
  }
  return std::nullopt;
}

void CheckConfig(const SolverConfig& config) {
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  if (config.alpha && !(*config.alpha > 0.0 && *config.alpha <= 1.0)) {
    throw InputError("alpha must lie in (0, 1]");
  }
}

RunTrace StartTrace(const SolverConfig& config) {
  CheckConfig(config);
  RunTrace trace;
  trace.epsilon = config.epsilon;
  trace.seed = config.seed;
  if (config.alpha) {
    trace.alpha = *config.alpha;
    trace.tau = std::exp2(trace.alpha);
  } else {
    std::tie(trace.alpha, trace.tau) = SampleAlpha(config.seed);
  }
  return trace;
}

// Runs the inner improvement loop of iteration 'index' on top of a_prev and
// appends its record to the trace. Returns the final A_i.
IdSet RunIteration(Session& s, const IdSet& a_prev, int index,
                   RunTrace& trace) {
  IterationRecord record;
  record.index = index;
  record.threshold = trace.thresholds().m(index);
  IdSet a_cur;
  while (auto imp = Scan(s, a_prev, a_cur, record.threshold, trace.epsilon)) {
    for (int y : imp->removed) {
      a_cur = Without(a_cur, y);
      std::erase(trace.insertion_order, y);
    }
    for (int x : imp->added) {
      a_cur = With(a_cur, x);
      trace.insertion_order.push_back(x);
    }
    record.improvements.push_back(std::move(*imp));
    ++trace.improvement_count;
  }
  record.final_set = a_cur;
  trace.iterations.push_back(std::move(record));
  return a_cur;
}

void Finish(Session& s, const KParityConstraint& c, IdSet a, RunTrace& trace) {
  trace.output = std::move(a);
  trace.value_calls = s.value_calls;
  trace.feasibility_calls = s.feasibility_calls;
  const double budget = ImprovementBudget(trace.epsilon, c.ground().size());
  if (static_cast<double>(trace.improvement_count) > budget) {
    throw InternalError("improvement count " +
                        std::to_string(trace.improvement_count) +
                        " exceeds (1 + 2/eps)|E|");
  }
}

// Largest and smallest positive marginal over feasible single additions.
struct FeasibleMarginals {
  double best = -std::numeric_limits<double>::infinity();
  double smallest_positive = std::numeric_limits<double>::infinity();
};

FeasibleMarginals ScanAdditions(Session& s, const IdSet& a) {
  FeasibleMarginals out;
  const double fa = s.Value(a);
  for (int e : Difference(s.constraint().ground(), a)) {
    const IdSet plus = With(a, e);
    if (!s.Feasible(plus)) continue;
    const double g = s.Value(plus) - fa;
    out.best = std::max(out.best, g);
    if (g > 0.0) out.smallest_positive = std::min(out.smallest_positive, g);
  }
  return out;
}

}  // namespace

std::optional<Improvement> FindImprovement(const ValueOracle& f,
                                           const KParityConstraint& c,
                                           std::span<const int> a_prev,
                                           std::span<const int> a_cur,
                                           double theta, double epsilon) {
  if (!(theta > 0.0)) throw InputError("theta must be positive");
  Session s(f, c);
  const IdSet prev = Normalize(IdSet(a_prev.begin(), a_prev.end()));
  const IdSet cur = Normalize(IdSet(a_cur.begin(), a_cur.end()));
  if (!Disjoint(prev, cur) || !c.Feasible(Union(prev, cur))) {
    throw InputError("current solution must be feasible and disjoint");
  }
  return Scan(s, prev, cur, theta, epsilon);
}

RunResult RunReference(const ValueOracle& f, const KParityConstraint& c,
                       const SolverConfig& config) {
  RunTrace trace = StartTrace(config);
  Session s(f, c);
  IdSet a;
  trace.W = ComputeW(f, c.ground());
  s.value_calls += c.ground().size() + 1;
  if (c.ground().empty() || !(trace.W > 0.0)) {
    Finish(s, c, a, trace);
    return {a, std::move(trace)};
  }
  double smallest_positive = std::numeric_limits<double>::infinity();
  int i = 0;
  while (true) {
    const FeasibleMarginals adds = ScanAdditions(s, a);
    if (!(adds.best > 0.0)) break;
    smallest_positive = std::min(smallest_positive, adds.smallest_positive);
    const int cap = static_cast<int>(std::ceil(std::log2(trace.W) -
                                               std::log2(smallest_positive))) +
                    2;
    ++i;
    if (i > cap) {
      throw InternalError("iteration index " + std::to_string(i) +
                          " passed its provable cap; oracle is inconsistent");
    }
    const IdSet a_i = RunIteration(s, a, i, trace);
    a = Union(a, a_i);
  }
  Finish(s, c, a, trace);
  return {a, std::move(trace)};
}

RunResult RunEfficient(const ValueOracle& f, const KParityConstraint& c,
                       const SolverConfig& config) {
  RunTrace trace = StartTrace(config);
  Session s(f, c);
  IdSet a;
  trace.W = ComputeW(f, c.ground());
  s.value_calls += c.ground().size() + 1;
  if (c.ground().empty() || !(trace.W > 0.0)) {
    Finish(s, c, a, trace);
    return {a, std::move(trace)};
  }
  int i = 0;
  while (true) {
    const double w = ScanAdditions(s, a).best;
    if (!(w > 0.0)) break;
    if (w > trace.W) {
      throw InternalError("feasible marginal exceeds W; f is not submodular");
    }
    const int next = FastForward(trace.W, trace.tau, w);
    if (next <= i) {
      throw InternalError("fast-forward did not advance the iteration index");
    }
    i = next;
    const IdSet a_i = RunIteration(s, a, i, trace);
    a = Union(a, a_i);
  }
  Finish(s, c, a, trace);
  return {a, std::move(trace)};
}

}  // namespace subkp
