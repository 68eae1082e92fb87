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
#ifndef SUBKP_ANALYSIS_H_
#define SUBKP_ANALYSIS_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "subkp/kparity.h"
#include "subkp/objective.h"
#include "subkp/report.h"
#include "subkp/sets.h"
#include "subkp/solver.h"

namespace subkp {

using WeightMap = std::map<EdgeId, double>;

// Drops, smallest id first, every x with f(x | O - x) <= 0 until none is left.
IdSet PruneDownMonotone(const ValueOracle& f, std::span<const int> o);

// f(a_j | a_1..a_{j-1}) along the trace's insertion order.
WeightMap WeightsW(const RunTrace& trace, const ValueOracle& f);

// max(0, f(o_j | (A - o_j) u {o_1..o_{j-1}})) with O in ascending id order.
WeightMap WeightsOw(const ValueOracle& f, std::span<const int> a,
                    std::span<const int> o);

// f(o_j | o_1..o_{j-1}) with O in ascending id order.
WeightMap WeightsU(const ValueOracle& f, std::span<const int> o);

struct OPartition {
  std::map<int, IdSet> parts;     // iteration index -> O_i
  std::map<EdgeId, IdSet> n;      // N_o for o in some O_i
  std::map<EdgeId, int> part_of;  // o -> iteration index
  IdSet leftover;                 // O minus every O_i
  CheckReport checks;             // feasibility and exchange claims per round
};

// Walks the recorded iterations in order and builds the exchange structure
// between A_{<=i} and A_{<=i-1} u (O - O_{<=i-1}). Iterations missing from
// the trace have A_i empty and contribute nothing.
OPartition PartitionO(const RunTrace& trace, const KParityConstraint& c,
                      std::span<const int> o);

struct RhoValue {
  double m_o = 0.0;
  double r_o = 1.0;
  double rho = 1.0;
};

// m_o is the smallest threshold >= u. Throws InputError unless 0 < u <= m_0,
// or if d < 1 for the submodular branch.
RhoValue RAndRho(double u, const Thresholds& t, double d, bool linear);

// beta in [0, 1) with r_o = 2^beta.
double BetaOfAlpha(double W, double u, double alpha);

// 2 sqrt(k).
double DefaultD(int k);

struct NamedCheck {
  std::string name;
  bool ok = true;
  std::vector<std::string> witnesses;
};

struct ChargingReport {
  OPartition partition;
  IdSet o;    // the pruned reference solution actually used
  IdSet o_s;  // single-charge elements
  WeightMap w;
  WeightMap ow;
  WeightMap u;
  WeightMap rho;
  double d = 2.0;
  double chain_lhs = 0.0;
  double chain_rhs = 0.0;
  std::vector<NamedCheck> checks;

  bool ok() const;
  const NamedCheck* Find(const std::string& name) const;
};

// Rebuilds the charging structures for one run and checks every per-run
// inequality of the analysis. o must be feasible; it is pruned to a strictly
// down-monotone subset first. Requires d >= 2.
ChargingReport VerifyRun(const RunTrace& trace, const ValueOracle& f,
                         const KParityConstraint& c, std::span<const int> o,
                         double d);

}  // namespace subkp

#endif  // SUBKP_ANALYSIS_H_
