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
#include "subkp/nonmonotone.h"

#include <algorithm>
#include <string>

#include "subkp/errors.h"

namespace subkp {
namespace {

// Inclusion probability for one step.
double KeepProbability(double a, double b) {
  a = std::max(a, 0.0);
  b = std::max(b, 0.0);
  if (a + b == 0.0) return 1.0;
  return a / (a + b);
}

double Expect(const ValueOracle& f, const IdSet& s, std::size_t pos,
              const IdSet& x, const IdSet& y) {
  if (pos == s.size()) return f.Value(x);  // x == y here
  const int e = s[pos];
  const IdSet x_plus = With(x, e);
  const IdSet y_minus = Without(y, e);
  const double a = f.Value(x_plus) - f.Value(x);
  const double b = f.Value(y_minus) - f.Value(y);
  const double p = KeepProbability(a, b);
  double total = 0.0;
  if (p > 0.0) total += p * Expect(f, s, pos + 1, x_plus, y);
  if (p < 1.0) total += (1.0 - p) * Expect(f, s, pos + 1, x, y_minus);
  return total;
}

}  // namespace

IdSet DoubleGreedy(const ValueOracle& f, std::span<const int> s, Rng& rng) {
  const IdSet order = Normalize(IdSet(s.begin(), s.end()));
  IdSet x;
  IdSet y = order;
  double fx = f.Value(x);
  double fy = f.Value(y);
  for (int e : order) {
    const IdSet x_plus = With(x, e);
    const IdSet y_minus = Without(y, e);
    const double fx_plus = f.Value(x_plus);
    const double fy_minus = f.Value(y_minus);
    const double p = KeepProbability(fx_plus - fx, fy_minus - fy);
    if (rng.Uniform() < p) {
      x = x_plus;
      fx = fx_plus;
    } else {
      y = y_minus;
      fy = fy_minus;
    }
  }
  return x;
}

double DoubleGreedyExactExpectation(const ValueOracle& f,
                                    std::span<const int> s) {
  const IdSet order = Normalize(IdSet(s.begin(), s.end()));
  if (static_cast<int>(order.size()) > kMaxExactDoubleGreedy) {
    throw ScaleLimitError("exact double greedy expectation is limited to " +
                          std::to_string(kMaxExactDoubleGreedy) + " elements");
  }
  return Expect(f, order, 0, {}, order);
}

int DefaultEll(int k) {
  if (k < 1) throw InputError("k must be positive");
  // l >= 4 k^(2/3)  <=>  l^3 >= 64 k^2
  const long long target = 64LL * k * k;
  long long l = 1;
  while (l * l * l < target) ++l;
  return static_cast<int>(l);
}

RepetitionsResult Repetitions(const ValueOracle& f, const KParityConstraint& c,
                              const RepetitionsConfig& config) {
  RepetitionsResult result;
  result.ell = config.ell == 0 ? DefaultEll(c.k()) : config.ell;
  if (result.ell < 1) throw InputError("ell must be at least 1");
  if (!(config.epsilon > 0.0 && config.epsilon < 1.0)) {
    throw InputError("epsilon must lie in (0, 1)");
  }
  IdSet ground = c.ground();
  result.solution = {};
  result.value = f.Value(result.solution);
  bool have_best = false;
  auto offer = [&](const IdSet& s, double v) {
    if (!have_best || v > result.value) {
      result.solution = s;
      result.value = v;
      have_best = true;
    }
  };
  for (int round = 0; round < result.ell; ++round) {
    const KParityConstraint sub = c.RestrictGround(ground);
    SolverConfig sc;
    sc.epsilon = config.epsilon;
    sc.seed = DeriveSeed(config.seed, 2 * static_cast<std::uint64_t>(round));
    RunResult run = RunEfficient(f, sub, sc);
    Rng dg_rng(DeriveSeed(config.seed, 2 * static_cast<std::uint64_t>(round) + 1));
    RepetitionRound r;
    r.ground = ground;
    r.b = run.solution;
    r.b_prime = DoubleGreedy(f, r.b, dg_rng);
    r.value_b = f.Value(r.b);
    r.value_b_prime = f.Value(r.b_prime);
    r.trace = std::move(run.trace);
    offer(r.b, r.value_b);
    offer(r.b_prime, r.value_b_prime);
    ground = Difference(ground, r.b);
    result.rounds.push_back(std::move(r));
  }
  return result;
}

}  // namespace subkp
