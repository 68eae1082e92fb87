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
#include "subkp/analysis.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "subkp/errors.h"
#include "subkp/exchange.h"

namespace subkp {
namespace {

// Slack for inequalities between sums of doubles; exact for integer data.
double Tol(double scale) { return 1e-9 * std::max(1.0, std::abs(scale)); }

bool Le(double lhs, double rhs) { return lhs <= rhs + Tol(std::max(std::abs(lhs), std::abs(rhs))); }

std::string Num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

class Checks {
 public:
  NamedCheck& Get(const std::string& name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back({name, true, {}});
    return checks_.back();
  }
  void Expect(const std::string& name, bool cond, const std::string& witness) {
    NamedCheck& c = Get(name);
    if (cond) return;
    c.ok = false;
    if (c.witnesses.size() < 8) c.witnesses.push_back(witness);
  }
  std::vector<NamedCheck> Take() { return std::move(checks_); }

 private:
  std::vector<NamedCheck> checks_;
};

}  // namespace

IdSet PruneDownMonotone(const ValueOracle& f, std::span<const int> o_in) {
  IdSet o = Normalize(IdSet(o_in.begin(), o_in.end()));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x : o) {
      const IdSet rest = Without(o, x);
      if (f.Value(o) - f.Value(rest) <= 0.0) {
        o = rest;
        changed = true;
        break;
      }
    }
  }
  return o;
}

WeightMap WeightsW(const RunTrace& trace, const ValueOracle& f) {
  WeightMap w;
  IdSet prefix;
  double prev = f.Value(prefix);
  for (int a : trace.insertion_order) {
    prefix = With(prefix, a);
    const double cur = f.Value(prefix);
    w[a] = cur - prev;
    prev = cur;
  }
  return w;
}

WeightMap WeightsOw(const ValueOracle& f, std::span<const int> a_in,
                    std::span<const int> o_in) {
  const IdSet a = Normalize(IdSet(a_in.begin(), a_in.end()));
  const IdSet o = Normalize(IdSet(o_in.begin(), o_in.end()));
  WeightMap ow;
  IdSet prefix;
  for (int oj : o) {
    const IdSet base = Union(Without(a, oj), prefix);
    ow[oj] = std::max(0.0, f.Value(With(base, oj)) - f.Value(base));
    prefix = With(prefix, oj);
  }
  return ow;
}

WeightMap WeightsU(const ValueOracle& f, std::span<const int> o_in) {
  const IdSet o = Normalize(IdSet(o_in.begin(), o_in.end()));
  WeightMap u;
  IdSet prefix;
  double prev = f.Value(prefix);
  for (int oj : o) {
    prefix = With(prefix, oj);
    const double cur = f.Value(prefix);
    u[oj] = cur - prev;
    prev = cur;
  }
  return u;
}

OPartition PartitionO(const RunTrace& trace, const KParityConstraint& c,
                      std::span<const int> o_in) {
  const IdSet o = Normalize(IdSet(o_in.begin(), o_in.end()));
  OPartition out;
  auto fail = [&](std::string what) {
    out.checks.ok = false;
    out.checks.violations.push_back(std::move(what));
  };
  if (!c.Feasible(o)) throw InputError("reference solution is infeasible");
  IdSet a_prev;       // A_{<=i-1}
  IdSet remaining = o;  // O minus O_{<=i-1}
  for (const IterationRecord& it : trace.iterations) {
    const IdSet a_le = Union(a_prev, it.final_set);
    const IdSet b = Union(a_prev, remaining);
    const ExchangeStructure x = BuildExchangeStructure(c, a_le, b);
    const CheckReport claims = CheckExchangeClaims(c, a_le, b, x);
    for (const auto& v : claims.violations) {
      fail("iteration " + std::to_string(it.index) + ": " + v);
    }
    IdSet part;
    for (int e : remaining) {
      const IdSet& ne = x.n.at(e);
      if (ne.empty()) continue;
      part.push_back(e);
      out.n[e] = ne;
      out.part_of[e] = it.index;
    }
    remaining = Difference(remaining, part);
    if (!part.empty()) out.parts[it.index] = part;
    a_prev = a_le;
    if (!Disjoint(a_prev, remaining) || !c.Feasible(Union(a_prev, remaining))) {
      fail("iteration " + std::to_string(it.index) +
           ": A_{<=i} u (O - O_{<=i}) is not a disjoint feasible union");
    }
  }
  out.leftover = remaining;
  return out;
}

RhoValue RAndRho(double u, const Thresholds& t, double d, bool linear) {
  if (!(u > 0.0)) throw InputError("r_o needs u > 0");
  if (u > t.m(0)) throw InputError("r_o needs u <= m_0");
  if (!linear && !(d >= 1.0)) throw InputError("rho needs d >= 1");
  int i = static_cast<int>(std::floor(std::log2(t.m(0)) - std::log2(u)));
  i = std::max(i, 0);
  while (i > 0 && t.m(i) < u) --i;
  while (t.m(i + 1) >= u) ++i;
  RhoValue out;
  out.m_o = t.m(i);
  out.r_o = out.m_o / u;
  if (linear) {
    out.rho = out.r_o;
  } else {
    const double q = 1.0 - 1.0 / d;
    out.rho = std::min(out.r_o, (1.0 - 0.5 * q) / (1.0 - q / out.r_o));
  }
  return out;
}

double BetaOfAlpha(double W, double u, double alpha) {
  if (!(u > 0.0 && u <= W)) throw InputError("beta needs 0 < u <= W");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InputError("alpha must lie in (0, 1]");
  const double gap = std::log2(W) - std::log2(u);
  const double i_star = std::floor(gap) + 1.0;
  const double alpha_star = i_star - gap;
  return alpha < alpha_star ? alpha - alpha_star + 1.0 : alpha - alpha_star;
}

double DefaultD(int k) {
  if (k < 1) throw InputError("k must be positive");
  return 2.0 * std::sqrt(static_cast<double>(k));
}

bool ChargingReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const NamedCheck& c) { return c.ok; });
}

const NamedCheck* ChargingReport::Find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

ChargingReport VerifyRun(const RunTrace& trace, const ValueOracle& f,
                         const KParityConstraint& c, std::span<const int> o_in,
                         double d) {
  if (!(d >= 2.0)) throw InputError("verification needs d >= 2");
  ChargingReport rep;
  rep.d = d;
  const IdSet o_raw = Normalize(IdSet(o_in.begin(), o_in.end()));
  if (!c.Feasible(o_raw)) throw InputError("reference solution is infeasible");
  rep.o = PruneDownMonotone(f, o_raw);
  const IdSet& o = rep.o;
  const IdSet& a = trace.output;
  const Thresholds t = trace.thresholds();
  const bool linear = f.declared_class() == ObjectiveClass::kLinear;
  const double eps = trace.epsilon;
  Checks ck;
  auto S = [](int e) { return std::to_string(e); };

  {
    IdSet order = Normalize(trace.insertion_order);
    ck.Expect("trace_consistent",
              order == a && order.size() == trace.insertion_order.size(),
              "insertion order does not list the output exactly once");
    IdSet seen;
    for (const auto& it : trace.iterations) {
      ck.Expect("trace_consistent", Disjoint(seen, it.final_set),
                "A_" + std::to_string(it.index) + " overlaps earlier sets");
      seen = Union(seen, it.final_set);
    }
    ck.Expect("trace_consistent", seen == a, "union of A_i differs from output");
    if (!ck.Get("trace_consistent").ok) {
      rep.checks = ck.Take();
      return rep;
    }
  }

  rep.partition = PartitionO(trace, c, o);
  const OPartition& part = rep.partition;
  ck.Get("partition_feasible");
  for (const auto& v : part.checks.violations) ck.Expect("partition_feasible", false, v);

  rep.w = WeightsW(trace, f);
  rep.ow = WeightsOw(f, a, o);
  rep.u = WeightsU(f, o);
  const double f_empty = f.Value({});
  const double f_a = f.Value(a);
  const double gain_a = f_a - f_empty;

  // Weight bracket of every solution element.
  ck.Get("w_bracket");
  for (const auto& it : trace.iterations) {
    const double lo = t.m(it.index);
    const double hi = t.m(it.index - 1);
    for (int e : it.final_set) {
      const double we = rep.w.at(e);
      ck.Expect("w_bracket", we > 0.0 && Le(lo, we) && Le(we, hi),
                "a=" + S(e) + " w=" + Num(we) + " outside [" + Num(lo) + ", " +
                    Num(hi) + "]");
    }
  }
  ck.Get("ow_upper");
  for (const auto& [i, oi] : part.parts) {
    for (int e : oi) {
      ck.Expect("ow_upper", Le(rep.ow.at(e), t.m(i - 1)),
                "o=" + S(e) + " ow=" + Num(rep.ow.at(e)) + " > m_{i-1}=" +
                    Num(t.m(i - 1)));
    }
  }
  ck.Get("ow_leftover_zero");
  for (int e : part.leftover) {
    ck.Expect("ow_leftover_zero", rep.ow.at(e) == 0.0 || Le(rep.ow.at(e), 0.0),
              "o=" + S(e) + " ow=" + Num(rep.ow.at(e)));
  }
  ck.Get("ow_le_w");
  for (int e : Intersection(o, a)) {
    ck.Expect("ow_le_w", Le(rep.ow.at(e), rep.w.at(e)),
              "o=" + S(e) + " ow=" + Num(rep.ow.at(e)) + " w=" + Num(rep.w.at(e)));
  }

  // u against ow.
  ck.Get("u_dominates_ow");
  double discrepancy = 0.0;
  for (int e : o) {
    const double ue = rep.u.at(e);
    const double owe = rep.ow.at(e);
    ck.Expect("u_dominates_ow", ue > 0.0 && Le(owe, ue),
              "o=" + S(e) + " u=" + Num(ue) + " ow=" + Num(owe));
    if (linear) {
      ck.Expect("u_dominates_ow", std::abs(ue - owe) <= Tol(ue),
                "linear objective but u != ow at o=" + S(e));
    }
    discrepancy += ue - owe;
  }
  {
    const double f_o = f.Value(o);
    const double f_ao = f.Value(Union(a, o));
    const double rhs = f_a - (f_ao - f_o);
    ck.Expect("discrepancy_bound", Le(discrepancy, rhs),
              "sum(u - ow)=" + Num(discrepancy) + " > " + Num(rhs));
  }

  // Single-charge elements.
  IdSet o_le;
  for (const auto& [i, oi] : part.parts) {
    for (int e : oi) {
      o_le.push_back(e);
      if (rep.ow.at(e) > t.m(i) && part.n.at(e).size() == 1) rep.o_s.push_back(e);
    }
  }
  o_le = Normalize(o_le);
  rep.o_s = Normalize(rep.o_s);
  auto w_of = [&](const IdSet& s) {
    double total = 0.0;
    for (int e : s) {
      auto it = rep.w.find(e);
      total += it == rep.w.end() ? std::nan("") : it->second;
    }
    return total;
  };
  ck.Get("single_charge");
  ck.Get("single_disjoint");
  double single_total = 0.0;
  IdSet charged;
  for (int e : rep.o_s) {
    const IdSet& ne = part.n.at(e);
    const double wn = w_of(ne);
    single_total += wn;
    ck.Expect("single_charge", Le(rep.ow.at(e), (1.0 + eps) * wn),
              "o=" + S(e) + " ow=" + Num(rep.ow.at(e)) + " w(N_o)=" + Num(wn));
    ck.Expect("single_disjoint", Disjoint(charged, ne),
              "o=" + S(e) + " shares N_o=" + ToString(ne));
    charged = Union(charged, ne);
  }
  ck.Expect("single_total", Le(single_total, gain_a),
            "sum w(N_o)=" + Num(single_total) + " > f(A|0)=" + Num(gain_a));

  ck.Get("at_most_k");
  std::map<EdgeId, int> blame;
  for (int e : o_le) {
    for (int x : part.n.at(e)) ++blame[x];
  }
  for (const auto& [x, cnt] : blame) {
    ck.Expect("at_most_k", cnt <= c.k(),
              "a=" + S(x) + " appears in " + std::to_string(cnt) + " sets N_o");
    ck.Expect("at_most_k", Contains(a, x), "N_o holds non-solution " + S(x));
  }

  // Threshold-ratio bound for the rest, then the full chain.
  ck.Get("other_bound");
  ck.Get("rho_range");
  double chain_lhs = 0.0;
  for (int e : o) {
    const double ue = rep.u.at(e);
    if (!(ue > 0.0) || ue > t.m(0)) {
      ck.Expect("rho_range", false, "u=" + Num(ue) + " outside (0, m_0] at o=" + S(e));
      continue;
    }
    const RhoValue rv = RAndRho(ue, t, d, linear);
    rep.rho[e] = rv.rho;
    ck.Expect("rho_range", rv.r_o >= 1.0 && rv.r_o < 2.0 && rv.rho <= rv.r_o,
              "r_o=" + Num(rv.r_o) + " rho=" + Num(rv.rho));
    chain_lhs += rv.rho * ue;
    if (Contains(o_le, e) && !Contains(rep.o_s, e)) {
      const double rhs = w_of(part.n.at(e)) + d * (ue - rep.ow.at(e));
      ck.Expect("other_bound", Le(rv.rho * ue, rhs),
                "o=" + S(e) + " rho*u=" + Num(rv.rho * ue) + " > " + Num(rhs));
    }
  }
  rep.chain_lhs = chain_lhs;
  rep.chain_rhs = (c.k() + 1.0 + 2.0 * eps) * gain_a + d * discrepancy;
  ck.Expect("chain", Le(rep.chain_lhs, rep.chain_rhs),
            "sum rho*u=" + Num(rep.chain_lhs) + " > " + Num(rep.chain_rhs));
  rep.checks = ck.Take();
  return rep;
}

}  // namespace subkp
