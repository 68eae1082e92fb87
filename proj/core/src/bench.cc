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
#include "subkp/bench.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numeric>
#include <thread>
#include <utility>

#include "json.hpp"
#include "subkp/errors.h"
#include "subkp/nonmonotone.h"
#include "subkp/random.h"
#include "subkp/solver.h"

namespace subkp {
namespace {

int UniformInt(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng.Next() % span);
}

template <typename T>
void Shuffle(std::vector<T>& v, Rng& rng) {
  for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
    std::swap(v[i], v[UniformInt(rng, 0, i)]);
  }
}

IdSet RandomSubset(Rng& rng, int universe, int size) {
  std::vector<int> all(universe);
  std::iota(all.begin(), all.end(), 0);
  Shuffle(all, rng);
  all.resize(size);
  return Normalize(std::move(all));
}

// Counts queries of one solver run without touching the shared oracle.
class CountingOracle final : public ValueOracle {
 public:
  explicit CountingOracle(const ValueOracle& inner)
      : ValueOracle(inner.ground_size(), inner.declared_class()),
        inner_(inner) {}
  double Evaluate(std::span<const int> s) const override {
    return inner_.Evaluate(s);
  }

 private:
  const ValueOracle& inner_;
};

MatroidSpec BalancedPartition(int n, int blocks, Rng* rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  if (rng) Shuffle(perm, *rng);
  MatroidSpec m;
  m.type = "partition";
  m.blocks.assign(blocks, {});
  for (int x = 0; x < n; ++x) m.blocks[perm[x] % blocks].push_back(x);
  m.capacities.assign(blocks, 1);
  return m;
}

ObjectiveSpec MakeObjective(const GeneratorParams& p, Rng& rng) {
  ObjectiveSpec o;
  const int n = p.num_edges;
  switch (p.objective) {
    case ObjectiveFamily::kModular: {
      o.type = "modular";
      const int lo = p.allow_negative ? -p.max_weight : 1;
      for (int e = 0; e < n; ++e) {
        o.weights.push_back(UniformInt(rng, lo, p.max_weight));
      }
      break;
    }
    case ObjectiveFamily::kCoverage: {
      o.type = "coverage";
      const int items = std::max(2, n);
      for (int i = 0; i < items; ++i) {
        o.item_weights.push_back(UniformInt(rng, 1, p.max_weight));
      }
      for (int e = 0; e < n; ++e) {
        o.edge_items.push_back(
            RandomSubset(rng, items, UniformInt(rng, 1, std::min(3, items))));
      }
      break;
    }
    case ObjectiveFamily::kCut: {
      o.type = "cut";
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (UniformInt(rng, 0, 9) < 4) {
            o.links.emplace_back(u, v, UniformInt(rng, 1, p.max_weight));
          }
        }
      }
      break;
    }
  }
  return o;
}

std::string Fmt(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Fmt(const std::optional<double>& x) { return x ? Fmt(*x) : ""; }

}  // namespace

IdSet GreedyBaseline(const ValueOracle& f, const KParityConstraint& c) {
  IdSet a;
  while (true) {
    const double fa = f.Value(a);
    int best = -1;
    double best_gain = 0.0;
    for (int e : Difference(c.ground(), a)) {
      const IdSet plus = With(a, e);
      const double g = f.Value(plus) - fa;
      if (g > best_gain && c.FeasibleUnchecked(plus)) {
        best = e;
        best_gain = g;
      }
    }
    if (best < 0) return a;
    a = With(a, best);
  }
}

Optimum BruteForceOpt(const ValueOracle& f, const KParityConstraint& c) {
  const IdSet& ground = c.ground();
  if (static_cast<int>(ground.size()) > kMaxBruteForceEdges) {
    throw ScaleLimitError("brute force is limited to " +
                          std::to_string(kMaxBruteForceEdges) + " edges");
  }
  Optimum best{{}, f.Value({})};
  IdSet cur;
  // Feasible sets are down-closed, so an infeasible prefix ends the branch.
  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    for (std::size_t i = pos; i < ground.size(); ++i) {
      cur.push_back(ground[i]);
      if (c.FeasibleUnchecked(cur)) {
        const double v = f.Value(cur);
        if (v > best.value || (v == best.value && cur < best.set)) {
          best = {cur, v};
        }
        self(self, i + 1);
      }
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  return best;
}

std::string ToString(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kPartitionIntersection:
      return "partition-intersection";
    case InstanceKind::kSetPacking:
      return "set-packing";
    case InstanceKind::kRandomParity:
      return "random-parity";
  }
  return "?";
}

InstanceKind ParseInstanceKind(const std::string& name) {
  for (auto k : {InstanceKind::kPartitionIntersection, InstanceKind::kSetPacking,
                 InstanceKind::kRandomParity}) {
    if (ToString(k) == name) return k;
  }
  throw InputError("unknown instance kind '" + name + "'");
}

std::string ToString(ObjectiveFamily family) {
  switch (family) {
    case ObjectiveFamily::kModular:
      return "modular";
    case ObjectiveFamily::kCoverage:
      return "coverage";
    case ObjectiveFamily::kCut:
      return "cut";
  }
  return "?";
}

ObjectiveFamily ParseObjectiveFamily(const std::string& name) {
  for (auto f : {ObjectiveFamily::kModular, ObjectiveFamily::kCoverage,
                 ObjectiveFamily::kCut}) {
    if (ToString(f) == name) return f;
  }
  throw InputError("unknown objective family '" + name + "'");
}

InstanceSpec GenerateInstance(const GeneratorParams& p, std::uint64_t seed) {
  if (p.k < 1) throw InputError("k must be positive");
  if (p.num_edges < 1) throw InputError("need at least one edge");
  if (p.max_weight < 1) throw InputError("max_weight must be positive");
  if (p.allow_negative && p.objective != ObjectiveFamily::kModular) {
    throw InputError("negative weights only apply to modular objectives");
  }
  Rng rng(seed);
  InstanceSpec spec;
  spec.k = p.k;
  const int n = p.num_edges;
  switch (p.kind) {
    case InstanceKind::kPartitionIntersection: {
      const int blocks =
          std::max(1, static_cast<int>(std::ceil(std::sqrt(double(n)))));
      spec.intersection.push_back(BalancedPartition(n, blocks, nullptr));
      for (int j = 1; j < p.k; ++j) {
        spec.intersection.push_back(BalancedPartition(n, blocks, &rng));
      }
      break;
    }
    case InstanceKind::kSetPacking: {
      const int items = std::max(p.k, (n * p.k + 1) / 2);
      std::vector<IdSet> item_vertices(items);
      for (int e = 0; e < n; ++e) {
        const IdSet picked = RandomSubset(rng, items, p.k);
        IdSet verts;
        for (int j = 0; j < p.k; ++j) {
          verts.push_back(e * p.k + j);
          item_vertices[picked[j]].push_back(e * p.k + j);
        }
        spec.edges.push_back(verts);
      }
      MatroidSpec m;
      m.type = "partition";
      for (auto& b : item_vertices) {
        if (b.empty()) continue;
        m.blocks.push_back(Normalize(b));
        m.capacities.push_back(1);
      }
      spec.matroid = m;
      break;
    }
    case InstanceKind::kRandomParity: {
      const int nv = n * p.k;
      std::vector<int> perm(nv);
      std::iota(perm.begin(), perm.end(), 0);
      Shuffle(perm, rng);
      for (int e = 0; e < n; ++e) {
        spec.edges.push_back(Normalize(
            IdSet(perm.begin() + e * p.k, perm.begin() + (e + 1) * p.k)));
      }
      MatroidSpec m;
      if (UniformInt(rng, 0, 1) == 0) {
        m.type = "uniform";
        m.n = nv;
        m.rank = UniformInt(rng, p.k, std::max(p.k, nv / 2));
      } else {
        m.type = "graphic";
        m.num_nodes = std::max(2, nv / 2 + 1);
        for (int v = 0; v < nv; ++v) {
          const int a = UniformInt(rng, 0, m.num_nodes - 1);
          int b = UniformInt(rng, 0, m.num_nodes - 2);
          if (b >= a) ++b;
          m.graph_edges.emplace_back(a, b);
        }
      }
      spec.matroid = m;
      break;
    }
  }
  spec.objective = MakeObjective(p, rng);
  BuildInstance(spec);  // sanity check of everything emitted
  return spec;
}

std::string ToString(SolverMode mode) {
  switch (mode) {
    case SolverMode::kGreedy:
      return "greedy";
    case SolverMode::kHybrid:
      return "hybrid";
    case SolverMode::kHybridReference:
      return "hybrid-reference";
    case SolverMode::kNonmonotone:
      return "nonmonotone";
  }
  return "?";
}

SolverMode ParseSolverMode(const std::string& name) {
  for (auto m : {SolverMode::kGreedy, SolverMode::kHybrid,
                 SolverMode::kHybridReference, SolverMode::kNonmonotone}) {
    if (ToString(m) == name) return m;
  }
  throw InputError("unknown solver mode '" + name + "'");
}

std::vector<ExperimentRow> RunExperiment(const ExperimentSpec& spec) {
  if (spec.trials < 1) throw InputError("trials must be at least 1");
  if (spec.workers < 1) throw InputError("workers must be at least 1");
  std::vector<Instance> built;
  std::vector<std::optional<double>> opt;
  for (const auto& ni : spec.instances) {
    built.push_back(BuildInstance(ni.spec));
    const Instance& inst = built.back();
    if (spec.compute_opt &&
        static_cast<int>(inst.constraint.ground().size()) <= kMaxBruteForceEdges) {
      opt.push_back(BruteForceOpt(*inst.objective, inst.constraint).value);
    } else {
      opt.emplace_back();
    }
  }

  const std::size_t trials = static_cast<std::size_t>(spec.trials);
  std::vector<ExperimentRow> rows(built.size() * trials);
  auto run_one = [&](std::size_t task) {
    const std::size_t ii = task / trials;
    const std::uint64_t t = task % trials;
    const Instance& inst = built[ii];
    const CountingOracle f(*inst.objective);
    ExperimentRow& row = rows[task];
    row.instance_id = spec.instances[ii].id;
    row.seed = DeriveSeed(spec.seed, t);
    row.solver = spec.mode;
    row.k = inst.constraint.k();
    row.num_edges = static_cast<int>(inst.constraint.ground().size());
    const auto start = std::chrono::steady_clock::now();
    switch (spec.mode) {
      case SolverMode::kGreedy:
        row.solution = GreedyBaseline(f, inst.constraint);
        row.improvements = row.solution.size();
        break;
      case SolverMode::kHybrid:
      case SolverMode::kHybridReference: {
        SolverConfig sc;
        sc.epsilon = spec.epsilon;
        sc.seed = row.seed;
        RunResult r = spec.mode == SolverMode::kHybrid
                          ? RunEfficient(f, inst.constraint, sc)
                          : RunReference(f, inst.constraint, sc);
        row.solution = r.solution;
        row.alpha = r.trace.alpha;
        row.improvements = r.trace.improvement_count;
        break;
      }
      case SolverMode::kNonmonotone: {
        RepetitionsConfig rc;
        rc.ell = spec.ell;
        rc.epsilon = spec.epsilon;
        rc.seed = row.seed;
        const RepetitionsResult r = Repetitions(f, inst.constraint, rc);
        row.solution = r.solution;
        for (const auto& round : r.rounds) {
          row.improvements += round.trace.improvement_count;
        }
        break;
      }
    }
    const auto stop = std::chrono::steady_clock::now();
    row.oracle_calls = f.queries();
    row.value = inst.objective->Evaluate(row.solution);
    row.feasible = inst.constraint.Feasible(row.solution);
    row.opt_value = opt[ii];
    if (row.opt_value) {
      if (*row.opt_value == row.value) {
        row.ratio = 1.0;
      } else {
        row.ratio = row.value > 0.0 ? *row.opt_value / row.value
                                    : std::numeric_limits<double>::infinity();
      }
    }
    if (spec.timing) {
      row.millis = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  };

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(spec.workers);
  auto worker = [&](int id) {
    try {
      for (std::size_t task; (task = next++) < rows.size();) run_one(task);
    } catch (...) {
      errors[id] = std::current_exception();
      next = rows.size();
    }
  };
  if (spec.workers == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < spec.workers; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::string RowsToCsv(const std::vector<ExperimentRow>& rows) {
  std::string out =
      "instance_id,seed,alpha,solver,k,num_edges,value,opt_value,ratio,"
      "improvements,oracle_calls,millis\n";
  for (const auto& r : rows) {
    out += r.instance_id + "," + std::to_string(r.seed) + "," + Fmt(r.alpha) +
           "," + ToString(r.solver) + "," + std::to_string(r.k) + "," +
           std::to_string(r.num_edges) + "," + Fmt(r.value) + "," +
           Fmt(r.opt_value) + "," + Fmt(r.ratio) + "," +
           std::to_string(r.improvements) + "," +
           std::to_string(r.oracle_calls) + "," + Fmt(r.millis) + "\n";
  }
  return out;
}

std::string RowsToJson(const std::vector<ExperimentRow>& rows) {
  using nlohmann::json;
  auto opt = [](const std::optional<double>& x) -> json {
    if (!x) return nullptr;
    if (std::isinf(*x)) return "inf";
    return *x;
  };
  json jrows = json::array();
  std::vector<std::string> order;
  std::map<std::string, std::vector<const ExperimentRow*>> groups;
  for (const auto& r : rows) {
    jrows.push_back({{"instance_id", r.instance_id},
                     {"seed", r.seed},
                     {"alpha", opt(r.alpha)},
                     {"solver", ToString(r.solver)},
                     {"k", r.k},
                     {"num_edges", r.num_edges},
                     {"value", r.value},
                     {"opt_value", opt(r.opt_value)},
                     {"ratio", opt(r.ratio)},
                     {"improvements", r.improvements},
                     {"oracle_calls", r.oracle_calls},
                     {"millis", opt(r.millis)},
                     {"solution", r.solution},
                     {"feasible", r.feasible}});
    auto& g = groups[r.instance_id];
    if (g.empty()) order.push_back(r.instance_id);
    g.push_back(&r);
  }
  auto stats = [](const std::vector<double>& xs) -> json {
    if (xs.empty()) return nullptr;
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd = xs.size() > 1 ? std::sqrt(ss / (xs.size() - 1)) : 0.0;
    if (!std::isfinite(mean)) return {{"mean", "inf"}, {"stddev", nullptr}};
    return {{"mean", mean}, {"stddev", sd}};
  };
  json summary = json::array();
  for (const auto& id : order) {
    std::vector<double> values;
    std::vector<double> ratios;
    for (const auto* r : groups[id]) {
      values.push_back(r->value);
      if (r->ratio) ratios.push_back(*r->ratio);
    }
    summary.push_back({{"instance_id", id},
                       {"trials", values.size()},
                       {"value", stats(values)},
                       {"ratio", stats(ratios)}});
  }
  return json{{"rows", jrows}, {"summary", summary}}.dump(2) + "\n";
}

}  // namespace subkp
