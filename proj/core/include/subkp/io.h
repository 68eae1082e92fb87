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
#ifndef SUBKP_IO_H_
#define SUBKP_IO_H_

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "subkp/analysis.h"
#include "subkp/kparity.h"
#include "subkp/objective.h"
#include "subkp/sets.h"
#include "subkp/solver.h"

namespace subkp {

struct MatroidSpec {
  std::string type;  // uniform | partition | graphic | explicit
  int n = 0;         // uniform, explicit
  int rank = 0;      // uniform
  std::vector<IdSet> blocks;  // partition
  std::vector<int> capacities;
  int num_nodes = 0;  // graphic; one matroid element per graph edge
  std::vector<std::pair<int, int>> graph_edges;
  std::vector<IdSet> independent;  // explicit

  friend bool operator==(const MatroidSpec&, const MatroidSpec&) = default;
};

struct ObjectiveSpec {
  std::string type;  // modular | coverage | cut
  double w0 = 0.0;
  std::vector<double> weights;
  std::vector<double> item_weights;
  std::vector<IdSet> edge_items;
  std::vector<std::tuple<int, int, double>> links;  // endpoints are edge ids

  friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

// Either a parity instance (matroid + edges) or an intersection of k
// matroids over a shared ground set, whose elements become the edges.
struct InstanceSpec {
  int k = 1;
  std::optional<MatroidSpec> matroid;
  std::vector<IdSet> edges;
  std::vector<MatroidSpec> intersection;
  ObjectiveSpec objective;

  int num_edges() const;
  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct Instance {
  InstanceSpec spec;
  KParityConstraint constraint;
  ValueOraclePtr objective;
};

MatroidPtr BuildMatroid(const MatroidSpec& spec);
ValueOraclePtr BuildObjective(const ObjectiveSpec& spec, int num_edges);
Instance BuildInstance(const InstanceSpec& spec);

// Throws InputError on malformed documents.
InstanceSpec ParseInstance(const std::string& json_text);
std::string InstanceToJson(const InstanceSpec& spec);

std::string TraceToJson(const RunTrace& trace);
RunTrace ParseTrace(const std::string& json_text);

std::string ReportToJson(const ChargingReport& report);

// Throws IoError.
std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace subkp

#endif  // SUBKP_IO_H_
