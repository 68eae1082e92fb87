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
// Command-line front end: solve, verify, bench, gen.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subkp/analysis.h"
#include "subkp/bench.h"
#include "subkp/errors.h"
#include "subkp/io.h"
#include "subkp/nonmonotone.h"
#include "subkp/solver.h"

namespace {

using nlohmann::json;
using namespace subkp;

struct Common {
  std::string instance;
  std::string mode = "hybrid";
  std::optional<double> epsilon;
  std::uint64_t seed = 0;
  int ell = 0;
  std::string out;
};

double EpsilonFor(const Common& c, SolverMode mode) {
  if (c.epsilon) return *c.epsilon;
  return mode == SolverMode::kNonmonotone ? 0.5 : 0.1;
}

void Emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    WriteFile(out, text);
  }
}

int Solve(const Common& c) {
  const Instance inst = BuildInstance(ParseInstance(ReadFile(c.instance)));
  const SolverMode mode = ParseSolverMode(c.mode);
  const ValueOracle& f = *inst.objective;
  json result{{"mode", ToString(mode)}};
  IdSet solution;
  std::optional<RunTrace> trace;
  switch (mode) {
    case SolverMode::kGreedy:
      solution = GreedyBaseline(f, inst.constraint);
      break;
    case SolverMode::kHybrid:
    case SolverMode::kHybridReference: {
      SolverConfig sc;
      sc.epsilon = EpsilonFor(c, mode);
      sc.seed = c.seed;
      RunResult r = mode == SolverMode::kHybrid
                        ? RunEfficient(f, inst.constraint, sc)
                        : RunReference(f, inst.constraint, sc);
      solution = r.solution;
      result["alpha"] = r.trace.alpha;
      result["improvements"] = r.trace.improvement_count;
      trace = std::move(r.trace);
      break;
    }
    case SolverMode::kNonmonotone: {
      RepetitionsConfig rc;
      rc.ell = c.ell;
      rc.epsilon = EpsilonFor(c, mode);
      rc.seed = c.seed;
      const RepetitionsResult r = Repetitions(f, inst.constraint, rc);
      solution = r.solution;
      result["ell"] = r.ell;
      break;
    }
  }
  result["solution"] = solution;
  result["value"] = f.Value(solution);
  result["feasible"] = inst.constraint.Feasible(solution);
  std::cout << result.dump() << "\n";
  if (!c.out.empty()) {
    if (trace) {
      WriteFile(c.out, TraceToJson(*trace));
    } else {
      WriteFile(c.out, result.dump(2) + "\n");
    }
  }
  return 0;
}

int Verify(const Common& c, const std::string& trace_path,
           std::optional<double> d, const std::vector<int>& reference) {
  const Instance inst = BuildInstance(ParseInstance(ReadFile(c.instance)));
  const RunTrace trace = ParseTrace(ReadFile(trace_path));
  IdSet o = reference;
  if (o.empty()) o = BruteForceOpt(*inst.objective, inst.constraint).set;
  const double dd = d ? *d : DefaultD(inst.constraint.k());
  const ChargingReport rep =
      VerifyRun(trace, *inst.objective, inst.constraint, o, dd);
  Emit(c.out, ReportToJson(rep));
  for (const auto& chk : rep.checks) {
    std::cerr << (chk.ok ? "ok   " : "FAIL ") << chk.name << "\n";
  }
  return rep.ok() ? 0 : 1;
}

int Bench(const Common& c, const std::vector<std::string>& instances,
          const GeneratorParams& gen, int count, int trials, int workers,
          bool timing, const std::string& json_out) {
  ExperimentSpec spec;
  spec.mode = ParseSolverMode(c.mode);
  spec.epsilon = EpsilonFor(c, spec.mode);
  spec.seed = c.seed;
  spec.trials = trials;
  spec.ell = c.ell;
  spec.workers = workers;
  spec.timing = timing;
  for (const auto& path : instances) {
    spec.instances.push_back({path, ParseInstance(ReadFile(path))});
  }
  if (instances.empty()) {
    for (int i = 0; i < count; ++i) {
      const std::uint64_t s = DeriveSeed(c.seed, 1000000 + i);
      spec.instances.push_back(
          {ToString(gen.kind) + "-" + std::to_string(i), GenerateInstance(gen, s)});
    }
  }
  const auto rows = RunExperiment(spec);
  Emit(c.out, RowsToCsv(rows));
  if (!json_out.empty()) WriteFile(json_out, RowsToJson(rows));
  for (const auto& r : rows) {
    if (!r.feasible) {
      std::cerr << "infeasible output on " << r.instance_id << "\n";
      return 1;
    }
  }
  return 0;
}

void AddGeneratorOptions(CLI::App* app, GeneratorParams& gen,
                         std::string& kind, std::string& objective) {
  app->add_option("--kind", kind,
                  "partition-intersection | set-packing | random-parity")
      ->capture_default_str();
  app->add_option("--objective", objective, "modular | coverage | cut")
      ->capture_default_str();
  app->add_option("--k", gen.k, "Edge size / number of matroids")
      ->capture_default_str();
  app->add_option("--edges", gen.num_edges, "Number of edges")
      ->capture_default_str();
  app->add_option("--max-weight", gen.max_weight, "Largest integer weight")
      ->capture_default_str();
  app->add_flag("--negative", gen.allow_negative,
                "Modular weights may be negative");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Threshold greedy/local-search for submodular k-parity"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    auto* opt = sub->add_option("--instance", common.instance, "Instance JSON");
    if (needs_instance) opt->required()->check(CLI::ExistingFile);
    sub->add_option("--mode", common.mode,
                    "greedy | hybrid | hybrid-reference | nonmonotone")
        ->capture_default_str();
    sub->add_option("--epsilon", common.epsilon,
                    "Improvement slack (default 0.1, nonmonotone 0.5)");
    sub->add_option("--seed", common.seed, "Random seed")->capture_default_str();
    sub->add_option("--ell", common.ell, "Nonmonotone rounds (0 = default)")
        ->capture_default_str();
    sub->add_option("--out", common.out, "Output file");
  };

  auto* solve = app.add_subcommand("solve", "Run a solver on one instance");
  add_common(solve, true);

  auto* verify =
      app.add_subcommand("verify", "Check the charging inequalities of a trace");
  add_common(verify, true);
  std::string trace_path;
  std::optional<double> d;
  std::vector<int> reference;
  verify->add_option("--trace", trace_path, "Trace JSON from solve --out")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("--d", d, "Charging parameter (default 2 sqrt(k))");
  verify->add_option("--reference", reference,
                     "Reference solution edge ids (default: brute-force OPT)");

  auto* bench = app.add_subcommand("bench", "Run an experiment, write CSV");
  add_common(bench, false);
  std::vector<std::string> bench_instances;
  GeneratorParams bench_gen;
  std::string bench_kind = "partition-intersection";
  std::string bench_objective = "modular";
  int count = 10;
  int trials = 1;
  int workers = 1;
  bool timing = false;
  std::string json_out;
  bench->remove_option(bench->get_option("--instance"));
  bench->add_option("--instance", bench_instances, "Instance JSON files")
      ->check(CLI::ExistingFile);
  AddGeneratorOptions(bench, bench_gen, bench_kind, bench_objective);
  bench->add_option("--count", count, "Generated instances when no --instance")
      ->capture_default_str();
  bench->add_option("--trials", trials, "Alpha draws per instance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_option("--workers", workers, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  bench->add_flag("--timing", timing, "Fill the millis column");
  bench->add_option("--json", json_out, "Also write rows and summary as JSON");

  auto* gen = app.add_subcommand("gen", "Generate a seeded instance");
  GeneratorParams gen_params;
  std::string gen_kind = "partition-intersection";
  std::string gen_objective = "modular";
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  AddGeneratorOptions(gen, gen_params, gen_kind, gen_objective);
  gen->add_option("--seed", gen_seed, "Random seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; usage errors share the input-error code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return Solve(common);
    if (*verify) return Verify(common, trace_path, d, reference);
    if (*bench) {
      bench_gen.kind = ParseInstanceKind(bench_kind);
      bench_gen.objective = ParseObjectiveFamily(bench_objective);
      return Bench(common, bench_instances, bench_gen, count, trials, workers,
                   timing, json_out);
    }
    if (*gen) {
      gen_params.kind = ParseInstanceKind(gen_kind);
      gen_params.objective = ParseObjectiveFamily(gen_objective);
      Emit(gen_out, InstanceToJson(GenerateInstance(gen_params, gen_seed)));
      return 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
