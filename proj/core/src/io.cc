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
#include "subkp/io.h"

#include <fstream>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "subkp/errors.h"

namespace subkp {
namespace {

using nlohmann::json;

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T Get(const json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad field '") + key + "': " + e.what());
  }
}

json MatroidJson(const MatroidSpec& m) {
  json j{{"type", m.type}};
  if (m.type == "uniform") {
    j["n"] = m.n;
    j["rank"] = m.rank;
  } else if (m.type == "partition") {
    j["blocks"] = m.blocks;
    j["capacities"] = m.capacities;
  } else if (m.type == "graphic") {
    j["num_nodes"] = m.num_nodes;
    json edges = json::array();
    for (const auto& [u, v] : m.graph_edges) edges.push_back({u, v});
    j["edges"] = edges;
  } else if (m.type == "explicit") {
    j["n"] = m.n;
    j["independent"] = m.independent;
  } else {
    throw InputError("unknown matroid type '" + m.type + "'");
  }
  return j;
}

MatroidSpec ParseMatroid(const json& j) {
  MatroidSpec m;
  m.type = Get<std::string>(j, "type");
  if (m.type == "uniform") {
    m.n = Get<int>(j, "n");
    m.rank = Get<int>(j, "rank");
  } else if (m.type == "partition") {
    m.blocks = Get<std::vector<IdSet>>(j, "blocks");
    m.capacities = Get<std::vector<int>>(j, "capacities");
  } else if (m.type == "graphic") {
    m.num_nodes = Get<int>(j, "num_nodes");
    for (const auto& e : Get<std::vector<std::vector<int>>>(j, "edges")) {
      if (e.size() != 2) throw InputError("graphic edges need two endpoints");
      m.graph_edges.emplace_back(e[0], e[1]);
    }
  } else if (m.type == "explicit") {
    m.n = Get<int>(j, "n");
    m.independent = Get<std::vector<IdSet>>(j, "independent");
  } else {
    throw InputError("unknown matroid type '" + m.type + "'");
  }
  return m;
}

json ObjectiveJson(const ObjectiveSpec& o) {
  json j{{"type", o.type}};
  if (o.type == "modular") {
    j["w0"] = o.w0;
    j["weights"] = o.weights;
  } else if (o.type == "coverage") {
    j["item_weights"] = o.item_weights;
    j["edge_items"] = o.edge_items;
  } else if (o.type == "cut") {
    json links = json::array();
    for (const auto& [u, v, w] : o.links) links.push_back({u, v, w});
    j["links"] = links;
  } else {
    throw InputError("unknown objective type '" + o.type + "'");
  }
  return j;
}

ObjectiveSpec ParseObjective(const json& j) {
  ObjectiveSpec o;
  o.type = Get<std::string>(j, "type");
  if (o.type == "modular") {
    o.w0 = j.contains("w0") ? Get<double>(j, "w0") : 0.0;
    o.weights = Get<std::vector<double>>(j, "weights");
  } else if (o.type == "coverage") {
    o.item_weights = Get<std::vector<double>>(j, "item_weights");
    o.edge_items = Get<std::vector<IdSet>>(j, "edge_items");
  } else if (o.type == "cut") {
    for (const auto& l : Field(j, "links")) {
      if (!l.is_array() || l.size() != 3) {
        throw InputError("cut links are [u, v, weight]");
      }
      try {
        o.links.emplace_back(l[0].get<int>(), l[1].get<int>(),
                             l[2].get<double>());
      } catch (const json::exception& e) {
        throw InputError(std::string("bad cut link: ") + e.what());
      }
    }
  } else {
    throw InputError("unknown objective type '" + o.type + "'");
  }
  return o;
}

json IdMap(const WeightMap& m) {
  json j = json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

int InstanceSpec::num_edges() const {
  if (matroid) return static_cast<int>(edges.size());
  if (intersection.empty()) return 0;
  return BuildMatroid(intersection.front())->ground_size();
}

MatroidPtr BuildMatroid(const MatroidSpec& m) {
  if (m.type == "uniform") return std::make_shared<UniformMatroid>(m.n, m.rank);
  if (m.type == "partition") {
    return std::make_shared<PartitionMatroid>(m.blocks, m.capacities);
  }
  if (m.type == "graphic") {
    return std::make_shared<GraphicMatroid>(m.num_nodes, m.graph_edges);
  }
  if (m.type == "explicit") {
    return std::make_shared<ExplicitMatroid>(m.n, m.independent);
  }
  throw InputError("unknown matroid type '" + m.type + "'");
}

ValueOraclePtr BuildObjective(const ObjectiveSpec& o, int num_edges) {
  auto check_size = [&](std::size_t got, const char* what) {
    if (static_cast<int>(got) != num_edges) {
      throw InputError(std::string(what) + " must list one entry per edge");
    }
  };
  if (o.type == "modular") {
    check_size(o.weights.size(), "modular weights");
    return std::make_shared<ModularObjective>(o.w0, o.weights);
  }
  if (o.type == "coverage") {
    check_size(o.edge_items.size(), "coverage edge_items");
    return std::make_shared<CoverageObjective>(o.item_weights, o.edge_items);
  }
  if (o.type == "cut") {
    std::vector<WeightedLink> links;
    for (const auto& [u, v, w] : o.links) links.push_back({u, v, w});
    return std::make_shared<CutObjective>(num_edges, std::move(links));
  }
  throw InputError("unknown objective type '" + o.type + "'");
}

Instance BuildInstance(const InstanceSpec& spec) {
  if (spec.matroid.has_value() == !spec.intersection.empty()) {
    throw InputError("instance needs exactly one of 'matroid' or 'intersection'");
  }
  if (spec.matroid) {
    KParityConstraint c(BuildMatroid(*spec.matroid), spec.edges, spec.k);
    ValueOraclePtr f = BuildObjective(spec.objective, c.num_edge_ids());
    return Instance{spec, std::move(c), std::move(f)};
  }
  std::vector<MatroidPtr> ms;
  for (const auto& m : spec.intersection) ms.push_back(BuildMatroid(m));
  KParityConstraint c = FromIntersection(ms);
  if (c.k() != spec.k) throw InputError("k must equal the number of matroids");
  ValueOraclePtr f = BuildObjective(spec.objective, c.num_edge_ids());
  return Instance{spec, std::move(c), std::move(f)};
}

InstanceSpec ParseInstance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("instance is not valid JSON: ") + e.what());
  }
  InstanceSpec spec;
  if (j.contains("intersection")) {
    for (const auto& m : Field(j, "intersection")) {
      spec.intersection.push_back(ParseMatroid(m));
    }
    spec.k = j.contains("k") ? Get<int>(j, "k")
                             : static_cast<int>(spec.intersection.size());
  } else {
    spec.k = Get<int>(j, "k");
    spec.matroid = ParseMatroid(Field(j, "matroid"));
    spec.edges = Get<std::vector<IdSet>>(j, "edges");
  }
  spec.objective = ParseObjective(Field(j, "objective"));
  return spec;
}

std::string InstanceToJson(const InstanceSpec& spec) {
  json j{{"k", spec.k}};
  if (spec.matroid) {
    j["matroid"] = MatroidJson(*spec.matroid);
    j["edges"] = spec.edges;
  } else {
    json ms = json::array();
    for (const auto& m : spec.intersection) ms.push_back(MatroidJson(m));
    j["intersection"] = ms;
  }
  j["objective"] = ObjectiveJson(spec.objective);
  return j.dump(2) + "\n";
}

std::string TraceToJson(const RunTrace& t) {
  json iters = json::array();
  for (const auto& it : t.iterations) {
    json imps = json::array();
    for (const auto& imp : it.improvements) {
      imps.push_back({{"kind", static_cast<int>(imp.kind)},
                      {"added", imp.added},
                      {"removed", imp.removed}});
    }
    iters.push_back({{"index", it.index},
                     {"threshold", it.threshold},
                     {"improvements", imps},
                     {"final_set", it.final_set}});
  }
  json j{{"alpha", t.alpha},
         {"tau", t.tau},
         {"W", t.W},
         {"epsilon", t.epsilon},
         {"seed", t.seed},
         {"iterations", iters},
         {"insertion_order", t.insertion_order},
         {"output", t.output},
         {"value_calls", t.value_calls},
         {"feasibility_calls", t.feasibility_calls},
         {"improvement_count", t.improvement_count}};
  return j.dump(2) + "\n";
}

RunTrace ParseTrace(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("trace is not valid JSON: ") + e.what());
  }
  RunTrace t;
  t.alpha = Get<double>(j, "alpha");
  t.tau = Get<double>(j, "tau");
  t.W = Get<double>(j, "W");
  t.epsilon = Get<double>(j, "epsilon");
  t.seed = Get<std::uint64_t>(j, "seed");
  for (const auto& it : Field(j, "iterations")) {
    IterationRecord rec;
    rec.index = Get<int>(it, "index");
    rec.threshold = Get<double>(it, "threshold");
    rec.final_set = Normalize(Get<IdSet>(it, "final_set"));
    for (const auto& imp : Field(it, "improvements")) {
      Improvement m;
      const int kind = Get<int>(imp, "kind");
      if (kind < 1 || kind > 3) throw InputError("improvement kind must be 1-3");
      m.kind = static_cast<ImprovementKind>(kind);
      m.added = Get<std::vector<EdgeId>>(imp, "added");
      m.removed = Normalize(Get<IdSet>(imp, "removed"));
      rec.improvements.push_back(std::move(m));
    }
    t.iterations.push_back(std::move(rec));
  }
  t.insertion_order = Get<std::vector<EdgeId>>(j, "insertion_order");
  t.output = Normalize(Get<IdSet>(j, "output"));
  t.value_calls = Get<std::uint64_t>(j, "value_calls");
  t.feasibility_calls = Get<std::uint64_t>(j, "feasibility_calls");
  t.improvement_count = Get<std::uint64_t>(j, "improvement_count");
  return t;
}

std::string ReportToJson(const ChargingReport& r) {
  json parts = json::object();
  for (const auto& [i, s] : r.partition.parts) parts[std::to_string(i)] = s;
  json n = json::object();
  for (const auto& [o, s] : r.partition.n) n[std::to_string(o)] = s;
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"witnesses", c.witnesses}});
  }
  json j{{"ok", r.ok()},
         {"d", r.d},
         {"O", r.o},
         {"O_parts", parts},
         {"N", n},
         {"O_s", r.o_s},
         {"leftover", r.partition.leftover},
         {"w", IdMap(r.w)},
         {"ow", IdMap(r.ow)},
         {"u", IdMap(r.u)},
         {"rho", IdMap(r.rho)},
         {"chain", {{"lhs", r.chain_lhs}, {"rhs", r.chain_rhs}}},
         {"checks", checks}};
  return j.dump(2) + "\n";
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << contents;
  if (!out.flush()) throw IoError("write failed for '" + path + "'");
}

}  // namespace subkp
