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

#include "pmgreedy/cli.h"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "pmgreedy/auction.h"
#include "pmgreedy/digraph.h"
#include "pmgreedy/errors.h"
#include "pmgreedy/exact.h"
#include "pmgreedy/generators.h"
#include "pmgreedy/greedy.h"
#include "pmgreedy/guarantee.h"
#include "pmgreedy/logdet.h"
#include "pmgreedy/panel.h"

namespace pmgreedy {
namespace {

enum class Kind { kGraph, kMatrix, kPanel, kAuction };

struct Instance {
  Kind kind;
  std::string type;  // objective name written to records
  std::string source;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::shared_ptr<const SetFunction> function;
  std::optional<WeightedDigraph> graph;
  std::optional<PsdMatrix> matrix;  // matrix behind logdet / entropy
  std::optional<TimeSeriesPanel> panel;
  std::optional<AuctionInstance> auction;
};

std::string Num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

int CountSources(const RunConfig& c) {
  return !c.graph_path.empty() + !c.panel_path.empty() +
         !c.auction_path.empty() + !c.matrix_path.empty() +
         !c.generate.empty();
}

Instance MatrixInstance(PsdMatrix m, const RunConfig& c, Instance inst) {
  if (c.regularize) m = RegularizeCovariance(m, *c.regularize);
  const std::string objective =
      c.objective.empty() ? (inst.kind == Kind::kPanel ? "entropy" : "logdet")
                          : c.objective;
  if (objective == "entropy") {
    inst.function = std::make_shared<EntropyFunction>(m);
  } else if (objective == "logdet") {
    inst.function = std::make_shared<LogDetFunction>(m);
  } else {
    throw InputError("objective '" + objective +
                     "' does not apply to a matrix instance");
  }
  inst.type = objective;
  inst.matrix = std::move(m);
  return inst;
}

Instance GraphInstance(WeightedDigraph g, const RunConfig& c, Instance inst) {
  if (!c.objective.empty() && c.objective != "cut") {
    throw InputError("objective '" + c.objective +
                     "' does not apply to a graph");
  }
  inst.kind = Kind::kGraph;
  inst.type = "cut";
  inst.function = std::make_shared<CutFunction>(g);
  inst.graph = std::move(g);
  return inst;
}

Instance AuctionInstanceFrom(AuctionInstance a, const RunConfig& c,
                             Instance inst) {
  if (!c.objective.empty() && c.objective != "welfare") {
    throw InputError("objective '" + c.objective +
                     "' does not apply to an auction");
  }
  inst.kind = Kind::kAuction;
  inst.type = "social_welfare";
  inst.function = std::make_shared<SocialWelfareFunction>(a);
  inst.auction = std::move(a);
  return inst;
}

Instance LoadInstance(const RunConfig& c) {
  const int sources = CountSources(c);
  if (sources != 1) {
    throw InputError(sources == 0
                         ? "no instance given (--graph, --panel, --auction, "
                           "--matrix or --generate)"
                         : "more than one instance source given");
  }
  Instance inst;
  if (!c.graph_path.empty()) {
    inst.source = c.graph_path;
    inst.parameters = {{"undirected", c.undirected ? "true" : "false"}};
    return GraphInstance(LoadEdgeList(c.graph_path, c.undirected), c, inst);
  }
  if (!c.panel_path.empty()) {
    inst.kind = Kind::kPanel;
    inst.source = c.panel_path;
    TimeSeriesPanel panel = LoadPanelCsv(c.panel_path);
    if (c.regularize) inst.parameters = {{"regularize", Num(*c.regularize)}};
    inst.panel = panel;
    return MatrixInstance(CovarianceFromPanel(panel), c, std::move(inst));
  }
  if (!c.auction_path.empty()) {
    inst.source = c.auction_path;
    return AuctionInstanceFrom(LoadAuctionJson(c.auction_path), c, inst);
  }
  if (!c.matrix_path.empty()) {
    inst.kind = Kind::kMatrix;
    inst.source = c.matrix_path;
    return MatrixInstance(LoadMatrixJson(c.matrix_path), c, std::move(inst));
  }

  inst.source = "generate:" + c.generate;
  const std::string seed = std::to_string(c.seed);
  if (c.generate == "bad-example") {
    inst.parameters = {{"n", std::to_string(c.n)}};
    return GraphInstance(BadExampleGraph(c.n), c, inst);
  }
  if (c.generate == "random-digraph") {
    inst.parameters = {{"n", std::to_string(c.n)},
                       {"p", Num(c.p)},
                       {"undirected", c.undirected ? "true" : "false"},
                       {"seed", seed}};
    return GraphInstance(RandomDigraph(c.n, c.p, c.seed, c.undirected), c,
                         inst);
  }
  if (c.generate == "random-psd") {
    inst.kind = Kind::kMatrix;
    inst.parameters = {
        {"n", std::to_string(c.n)}, {"sigma", Num(c.sigma)}, {"seed", seed}};
    return MatrixInstance(RandomPsd(c.n, c.sigma, c.seed), c, std::move(inst));
  }
  if (c.generate == "delta-matrix") {
    inst.kind = Kind::kMatrix;
    inst.parameters = {{"delta", Num(c.delta)}};
    return MatrixInstance(DeltaMatrix(c.delta), c, std::move(inst));
  }
  if (c.generate == "random-auction") {
    inst.parameters = {{"players", std::to_string(c.players)},
                       {"items", std::to_string(c.items)},
                       {"seed", seed}};
    return AuctionInstanceFrom(RandomAuction(c.players, c.items, c.seed), c,
                               inst);
  }
  if (c.generate == "random-panel") {
    inst.kind = Kind::kPanel;
    inst.parameters = {{"stations", std::to_string(c.stations)},
                       {"countries", std::to_string(c.countries)},
                       {"months", std::to_string(c.months)},
                       {"seed", seed}};
    TimeSeriesPanel panel =
        RandomPanel(c.stations, c.countries, c.months, c.seed);
    inst.panel = panel;
    return MatrixInstance(CovarianceFromPanel(panel), c, std::move(inst));
  }
  throw InputError("unknown generator '" + c.generate + "'");
}

PartitionMatroid BuildConstraint(const RunConfig& c, const Instance& inst) {
  const int given = c.uniform.has_value() + !c.partition_path.empty() +
                    c.country_fraction.has_value();
  const int n = inst.function->ground_size();
  if (given > 1) throw InputError("more than one constraint given");
  if (given == 0) {
    if (inst.kind == Kind::kAuction) return inst.auction->ItemPartition();
    throw InputError(
        "no constraint given (--uniform, --partition or --country-fraction)");
  }
  if (inst.kind == Kind::kAuction) {
    throw InputError("auctions use their item blocks; drop the constraint flag");
  }
  if (c.uniform) return PartitionMatroid::Uniform(n, *c.uniform);
  if (!c.partition_path.empty()) return LoadPartitionFile(c.partition_path, n);
  if (inst.kind != Kind::kPanel) {
    throw InputError("--country-fraction needs a station panel");
  }
  return CountryPartition(*inst.panel, *c.country_fraction);
}

std::string NormalizeMethod(const std::string& name) {
  if (name == "submodular") return "submodular_bound";
  if (name == "degree") return "degree_bound";
  if (name == "eigenvalue") return "eigenvalue_bound";
  if (name == "sum") return "sum_rule";
  return name;
}

CurvatureReport ComputeCurvature(const std::string& name,
                                 const Instance& inst) {
  const CurvatureMethod method = ParseCurvatureMethod(NormalizeMethod(name));
  switch (method) {
    case CurvatureMethod::kExact: {
      ValueOracle f(inst.function);
      return ExactCurvature(f);
    }
    case CurvatureMethod::kSubmodularBound: {
      ValueOracle f(inst.function);
      return SubmodularCurvatureBound(f);
    }
    case CurvatureMethod::kDegreeBound:
      if (!inst.graph) throw InputError("degree bound needs a graph instance");
      return DegreeCurvatureBound(*inst.graph);
    case CurvatureMethod::kEigenvalueBound:
      if (inst.type != "logdet") {
        throw InputError("eigenvalue bound needs a logdet objective");
      }
      return EigenvalueCurvatureBound(*inst.matrix);
    case CurvatureMethod::kSumRule:
      if (inst.type == "entropy") return EntropyCurvatureBound(*inst.matrix);
      if (inst.kind == Kind::kAuction) {
        std::vector<double> alphas;
        for (const auto& u : inst.auction->utilities()) {
          ValueOracle f(u);
          alphas.push_back(ExactCurvature(f).alpha);
        }
        return {SumCurvatureBound(alphas), CurvatureMethod::kSumRule, {}};
      }
      throw InputError("sum rule applies to entropy and auction instances");
  }
  throw InputError("unsupported curvature method");
}

ResultRecord BaseRecord(const Instance& inst, const PartitionMatroid& m) {
  ResultRecord r;
  r.instance = {inst.type, inst.source, inst.parameters};
  r.blocks = m.num_blocks();
  r.d = m.total_capacity();
  r.d_bar = m.min_capacity();
  return r;
}

void FillGreedy(ResultRecord& r, const GreedyTrace& trace) {
  r.greedy_value = trace.final_value();
  r.selections = trace.selections;
  r.oracle_calls = trace.oracle_calls;
  r.stopped_early = trace.stopped_early;
}

ResultRecord RunGreedyRecord(const RunConfig& c, bool with_exact) {
  const auto start = std::chrono::steady_clock::now();
  const Instance inst = LoadInstance(c);
  const PartitionMatroid m = BuildConstraint(c, inst);
  ValueOracle f(inst.function);
  ResultRecord r = BaseRecord(inst, m);
  FillGreedy(r, Greedy(f, m));
  if (with_exact) {
    ValueOracle g(inst.function);
    const ExactResult ex = BruteForceOpt(g, m);
    SetExact(r, {ex.best_value,
                 std::vector<Element>(ex.best_set.begin(), ex.best_set.end()),
                 ex.feasible_count, ex.oracle_calls});
  }
  if (!c.curvature.empty()) {
    r.curvature = ComputeCurvature(c.curvature, inst);
    const std::string family =
        !c.family.empty()
            ? c.family
            : (inst.kind == Kind::kAuction ? "subadditive" : "submodular");
    const GuaranteeParams p{r.curvature->alpha, r.d, r.d_bar};
    if (family == "submodular") {
      r.guarantee = ResultRecord::Guarantee{family, GuaranteeSubmodular(p)};
    } else if (family == "subadditive") {
      r.guarantee = ResultRecord::Guarantee{family, GuaranteeSubadditive(p)};
    } else {
      throw InputError("unknown family '" + family + "'");
    }
  }
  r.wall_seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

void Emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text << "\n";
  if (!file.flush()) throw IoError("failed writing " + path);
}

void AddInstanceOptions(CLI::App* app, RunConfig& c) {
  app->add_option("--graph", c.graph_path, "edge list file");
  app->add_option("--panel", c.panel_path, "station panel CSV");
  app->add_option("--auction", c.auction_path, "auction JSON");
  app->add_option("--matrix", c.matrix_path, "symmetric matrix JSON");
  app->add_option("--generate", c.generate,
                  "bad-example | random-psd | random-digraph | "
                  "random-auction | random-panel | delta-matrix");
  app->add_flag("--undirected", c.undirected, "mirror every edge");
  app->add_option("--objective", c.objective,
                  "cut | logdet | entropy | welfare");
  app->add_option("--regularize", c.regularize, "use I + sigma * matrix");
  app->add_option("--n", c.n, "vertex / matrix size");
  app->add_option("--p", c.p, "edge probability");
  app->add_option("--sigma", c.sigma, "random-psd scale");
  app->add_option("--delta", c.delta, "delta-matrix parameter");
  app->add_option("--players", c.players, "random-auction players");
  app->add_option("--items", c.items, "random-auction items");
  app->add_option("--stations", c.stations, "random-panel stations");
  app->add_option("--countries", c.countries, "random-panel countries");
  app->add_option("--months", c.months, "random-panel series length");
  app->add_option("--seed", c.seed, "generator seed");
}

void AddConstraintOptions(CLI::App* app, RunConfig& c) {
  app->add_option("--uniform", c.uniform, "cardinality budget d");
  app->add_option("--partition", c.partition_path, "partition file");
  app->add_option("--country-fraction", c.country_fraction,
                  "per-country budget as a fraction of its stations");
}

}  // namespace

ResultRecord CmdGreedy(const RunConfig& config) {
  return RunGreedyRecord(config, config.exact);
}

ResultRecord CmdExact(const RunConfig& config) {
  return RunGreedyRecord(config, true);
}

CurvatureReport CmdCurvature(const RunConfig& config) {
  const Instance inst = LoadInstance(config);
  return ComputeCurvature(config.curvature.empty() ? "exact" : config.curvature,
                          inst);
}

double CmdBound(const RunConfig& config) {
  const GuaranteeParams p{config.alpha, config.d, config.d_bar};
  if (config.family == "submodular" || config.family.empty()) {
    return GuaranteeSubmodular(p);
  }
  if (config.family == "subadditive") return GuaranteeSubadditive(p);
  throw InputError("unknown family '" + config.family + "'");
}

std::vector<ResultRecord> CmdSweep(const RunConfig& config) {
  const Instance inst = LoadInstance(config);
  if (config.uniform && *config.uniform == 0) return {};
  const auto start = std::chrono::steady_clock::now();
  const PartitionMatroid m = BuildConstraint(config, inst);
  ValueOracle f(inst.function);
  const GreedyTrace trace = Greedy(f, m);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  std::vector<ResultRecord> out;
  for (int t = 1; t <= trace.steps(); ++t) {
    ResultRecord r = BaseRecord(inst, m);
    r.instance.parameters.emplace_back("t", std::to_string(t));
    r.greedy_value = trace.values[t];
    r.selections.assign(trace.selections.begin(),
                        trace.selections.begin() + t);
    r.oracle_calls = trace.oracle_calls;
    r.stopped_early = trace.stopped_early && t == trace.steps();
    r.wall_seconds = seconds;
    out.push_back(std::move(r));
  }
  return out;
}

void CmdGenerate(const RunConfig& c) {
  if (c.output_path.empty()) throw InputError("generate needs --output");
  const std::string& kind = c.generate;
  if (kind == "bad-example") {
    WriteEdgeList(BadExampleGraph(c.n), c.output_path);
  } else if (kind == "random-digraph") {
    WriteEdgeList(RandomDigraph(c.n, c.p, c.seed, c.undirected), c.output_path);
  } else if (kind == "random-psd") {
    WriteMatrixJson(RandomPsd(c.n, c.sigma, c.seed), c.output_path);
  } else if (kind == "delta-matrix") {
    WriteMatrixJson(DeltaMatrix(c.delta), c.output_path);
  } else if (kind == "random-auction") {
    WriteAuctionJson(RandomAuction(c.players, c.items, c.seed), c.output_path);
  } else if (kind == "random-panel") {
    WritePanelCsv(RandomPanel(c.stations, c.countries, c.months, c.seed),
                  c.output_path);
  } else {
    throw InputError("unknown generator '" + kind + "'");
  }
}

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Greedy maximization under partition matroid constraints"};
  app.require_subcommand(1);
  RunConfig c;

  auto* greedy = app.add_subcommand("greedy", "run greedy on an instance");
  AddInstanceOptions(greedy, c);
  AddConstraintOptions(greedy, c);
  greedy->add_flag("--exact", c.exact, "also compute the optimum");
  greedy->add_option("--curvature", c.curvature,
                     "exact | submodular | degree | eigenvalue | sum");
  greedy->add_option("--family", c.family, "submodular | subadditive");
  greedy->add_option("--output", c.output_path, "result JSON path");

  auto* exact = app.add_subcommand("exact", "greedy plus brute-force optimum");
  AddInstanceOptions(exact, c);
  AddConstraintOptions(exact, c);
  exact->add_option("--curvature", c.curvature);
  exact->add_option("--family", c.family);
  exact->add_option("--output", c.output_path);

  auto* curvature = app.add_subcommand("curvature", "curvature or a bound");
  AddInstanceOptions(curvature, c);
  curvature->add_option("--method", c.curvature,
                        "exact | submodular | degree | eigenvalue | sum");
  curvature->add_option("--output", c.output_path);

  auto* bound = app.add_subcommand("bound", "approximation guarantee");
  bound->add_option("--alpha", c.alpha)->required();
  bound->add_option("--d", c.d)->required();
  bound->add_option("--dbar", c.d_bar)->required();
  bound->add_option("--family", c.family, "submodular | subadditive");

  auto* sweep = app.add_subcommand("sweep", "greedy prefix values");
  AddInstanceOptions(sweep, c);
  AddConstraintOptions(sweep, c);
  sweep->add_option("--output", c.output_path, "JSON array of records");
  sweep->add_option("--csv", c.csv_path, "t,value,element series");

  auto* generate = app.add_subcommand("generate", "write a generated instance");
  AddInstanceOptions(generate, c);
  generate->add_option("--output", c.output_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (greedy->parsed() || exact->parsed()) {
      c.subcommand = greedy->parsed() ? "greedy" : "exact";
      const ResultRecord r =
          greedy->parsed() ? CmdGreedy(c) : CmdExact(c);
      Emit(DumpJson(ToJson(r)), c.output_path, out);
    } else if (curvature->parsed()) {
      c.subcommand = "curvature";
      const CurvatureReport report = CmdCurvature(c);
      out << "alpha " << Num(report.alpha) << "\n";
      out << "method " << ToString(report.method) << "\n";
      if (report.witness) {
        out << "witness S=" << report.witness->s.ToString()
            << " Omega=" << report.witness->omega.ToString()
            << " element=" << report.witness->element << "\n";
      }
      if (!c.output_path.empty()) {
        Emit(DumpJson(ToJson(report)), c.output_path, out);
      }
    } else if (bound->parsed()) {
      c.subcommand = "bound";
      out << Num(CmdBound(c)) << "\n";
    } else if (sweep->parsed()) {
      c.subcommand = "sweep";
      const auto records = CmdSweep(c);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& r : records) arr.push_back(ToJson(r));
      Emit(DumpJson(arr), c.output_path, out);
      if (!c.csv_path.empty()) {
        std::string csv = "t,value,element";
        for (std::size_t t = 0; t < records.size(); ++t) {
          csv += "\n" + std::to_string(t + 1) + "," +
                 Num(records[t].greedy_value) + "," +
                 std::to_string(records[t].selections.back());
        }
        Emit(csv, c.csv_path, out);
      }
    } else if (generate->parsed()) {
      c.subcommand = "generate";
      CmdGenerate(c);
    }
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace pmgreedy
