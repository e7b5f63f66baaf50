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


// mbed: command-line front end for the edge-deletion library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mbed/balance.h"
#include "mbed/experiment.h"
#include "mbed/graph.h"
#include "mbed/verify.h"

namespace {

constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;

std::vector<int> ParseList(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad list item '" + item + "'");
    out.push_back(v);
  }
  return out;
}

mbed::LoadResult Load(const std::string& path, bool sign_from_weight) {
  mbed::LoadOptions options;
  options.sign_from_weight = sign_from_weight;
  return mbed::LoadEdgeListFile(path, options);
}

struct RunFlags {
  std::string file;
  std::string algo = "greedy";
  int budget = 1;
  int kcore = 0;
  std::uint64_t seed = 0;
  std::string candidates = "peripheral";
  bool oracle = false;
  bool sign_from_weight = false;
  bool no_timing = false;
  std::string json_path;
  std::string deleted_path;
};

void AddRunFlags(CLI::App* cmd, RunFlags& f, bool with_budget) {
  cmd->add_option("--algo", f.algo, "greedy, rg, min-cep, random, spec-top or isa");
  if (with_budget) cmd->add_option("--budget", f.budget, "number of edges to delete")->required();
  cmd->add_option("--kcore", f.kcore, "use the k-core instead of the LCC");
  cmd->add_option("--seed", f.seed, "seed for rg and random");
  cmd->add_option("--candidates", f.candidates, "all or peripheral")
      ->check(CLI::IsMember({"all", "peripheral"}));
  cmd->add_flag("--oracle", f.oracle, "brute-force cross-check on small targets");
  cmd->add_flag("--sign-from-weight", f.sign_from_weight, "take signs of arbitrary weights");
  cmd->add_flag("--no-timing", f.no_timing, "report 0 seconds (byte-stable output)");
  cmd->add_option("FILE", f.file, "edge list")->required();
}

mbed::ExperimentConfig ToConfig(const RunFlags& f, bool seed_given) {
  mbed::ExperimentConfig c;
  c.dataset = f.file;
  if (f.kcore > 0) c.selector = {mbed::TargetSelector::Kind::kKcore, f.kcore};
  c.algorithm = f.algo;
  c.budget = f.budget;
  c.candidates =
      f.candidates == "all" ? mbed::CandidatePolicy::kAll : mbed::CandidatePolicy::kPeripheral;
  if (seed_given) c.seed = f.seed;
  c.sign_from_weight = f.sign_from_weight;
  c.oracle = f.oracle;
  c.omit_timing = f.no_timing;
  return c;
}

int LoadInfo(const std::string& file, bool sign_from_weight) {
  const auto [g, report] = Load(file, sign_from_weight);
  const auto lcc = mbed::LargestConnectedComponent(g);
  std::cout << "nodes " << g.node_count() << "\n"
            << "edges " << g.edge_count() << "\n"
            << "negative_edges " << g.negative_edge_count() << "\n"
            << "components " << mbed::ConnectedComponentCount(g) << "\n"
            << "lcc_nodes " << lcc.size() << "\n"
            << "data_lines " << report.data_lines << "\n"
            << "comment_lines " << report.comment_lines << "\n"
            << "dropped_self_loops " << report.dropped_self_loops << "\n"
            << "dropped_duplicates " << report.dropped_duplicates << "\n"
            << "conflicting_duplicates " << report.conflicting_duplicates << "\n"
            << "balanced " << (mbed::CheckBalance(g).balanced() ? "yes" : "no") << "\n";
  return 0;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

int Optimize(const RunFlags& f, bool seed_given) {
  const auto config = ToConfig(f, seed_given);
  mbed::ValidateConfig(config);
  const auto loaded = Load(f.file, f.sign_from_weight);
  const auto rec = mbed::RunExperimentOnGraph(loaded.graph, config);
  mbed::WriteCsvHeader(std::cout);
  mbed::WriteCsvRow(std::cout, rec);
  if (rec.already_balanced) std::cerr << "note: target subgraph is already balanced\n";
  if (!rec.report.note.empty()) std::cerr << "note: " << rec.report.note << "\n";
  if (!rec.oracle_note.empty()) std::cerr << "oracle: " << rec.oracle_note << "\n";
  if (!f.json_path.empty()) WriteText(f.json_path, mbed::RecordToJson(rec) + "\n");
  if (!f.deleted_path.empty()) {
    // Ids refer to the target subgraph; write its endpoints as local ids.
    const auto h = mbed::InducedSubgraph(loaded.graph, mbed::SelectTarget(loaded.graph,
                                                                          config.selector));
    std::ostringstream out;
    for (mbed::EdgeId e : rec.report.deleted) {
      const auto& edge = h.graph.edge(e);
      out << loaded.graph.label(h.to_parent[edge.u]) << ' '
          << loaded.graph.label(h.to_parent[edge.v]) << ' '
          << (edge.sign == mbed::Sign::kPositive ? "+1" : "-1") << '\n';
    }
    WriteText(f.deleted_path, out.str());
  }
  return 0;
}

int RunSweep(const RunFlags& f, bool seed_given, const std::string& budgets,
             const std::string& kcores) {
  auto config = ToConfig(f, seed_given);
  const auto b_list = ParseList(budgets);
  const auto k_list = ParseList(kcores);
  if (!k_list.empty()) {
    config.selector = {mbed::TargetSelector::Kind::kKcore, k_list.front()};
  }
  if (!b_list.empty()) config.budget = b_list.front();
  mbed::ValidateConfig(config);
  const auto loaded = Load(f.file, f.sign_from_weight);
  mbed::WriteCsvHeader(std::cout);
  for (const auto& rec : mbed::Sweep(loaded.graph, config, b_list, k_list)) {
    mbed::WriteCsvRow(std::cout, rec);
    if (!rec.error.empty()) std::cerr << "cell error: " << rec.error << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximize structural balance of signed graphs by edge deletion"};
  app.require_subcommand(1);

  std::string info_file;
  bool info_weights = false;
  auto* info = app.add_subcommand("load-info", "summarize an edge list");
  info->add_option("FILE", info_file, "edge list")->required();
  info->add_flag("--sign-from-weight", info_weights, "take signs of arbitrary weights");

  RunFlags opt_flags;
  auto* optimize = app.add_subcommand("optimize", "run one edge-deletion algorithm");
  AddRunFlags(optimize, opt_flags, true);
  optimize->add_option("--json", opt_flags.json_path, "write the run record as JSON");
  optimize->add_option("--deleted", opt_flags.deleted_path, "write deleted edges as an edge list");

  RunFlags sweep_flags;
  std::string budgets, kcores;
  auto* sweep = app.add_subcommand("sweep", "run a budget or k-core sweep, CSV to stdout");
  AddRunFlags(sweep, sweep_flags, false);
  sweep->add_option("--budget", sweep_flags.budget, "budget for k-core sweeps");
  auto* b_opt = sweep->add_option("--budgets", budgets, "comma-separated budgets");
  auto* k_opt = sweep->add_option("--kcores", kcores, "comma-separated k values");
  b_opt->excludes(k_opt);

  mbed::VerifyLimits limits;
  std::vector<int> suites;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--max-nodes", limits.max_nodes, "largest graph in exhaustive families")
      ->check(CLI::Range(3, 12));
  verify->add_option("--suite", suites, "suite ids to run (default all)")
      ->check(CLI::Range(1, mbed::SuiteCount()));
  verify->add_option("--bitcoin", limits.bitcoin_path, "BitcoinAlpha edge list");
  verify->add_flag("--corrupt-sign", limits.corrupt_sign, "negative control for suite 1");

  std::string dot_file;
  bool dot_weights = false;
  auto* dot = app.add_subcommand("export-dot", "write a small graph in DOT format");
  dot->add_option("FILE", dot_file, "edge list")->required();
  dot->add_flag("--sign-from-weight", dot_weights, "take signs of arbitrary weights");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*info) return LoadInfo(info_file, info_weights);
    if (*optimize) return Optimize(opt_flags, optimize->count("--seed") > 0);
    if (*sweep) {
      if (!b_opt->count() && !k_opt->count()) {
        std::cerr << "sweep needs --budgets or --kcores\n";
        return kInputError;
      }
      return RunSweep(sweep_flags, sweep->count("--seed") > 0, budgets, kcores);
    }
    if (*verify) {
      bool failed = false;
      mbed::RunVerification(limits, suites, [&](const mbed::SuiteResult& r) {
        std::cout << mbed::FormatResult(r) << std::endl;
        failed = failed || r.status == mbed::SuiteStatus::kFail;
      });
      return failed ? kVerifyFailed : 0;
    }
    if (*dot) {
      mbed::ExportDot(std::cout, Load(dot_file, dot_weights).graph);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
