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


#include "mbed/experiment.h"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "mbed/balance.h"
#include "mbed/cep.h"
#include "mbed/optimize.h"
#include "mbed/spectral.h"

namespace mbed {

using nlohmann::json;

std::string TargetSelector::ToString() const {
  return kind == Kind::kLcc ? "lcc" : "kcore(" + std::to_string(k) + ")";
}

TargetSelector TargetSelector::Parse(const std::string& text) {
  if (text == "lcc") return {};
  if (text.rfind("kcore(", 0) == 0 && text.size() > 7 && text.back() == ')') {
    const std::string digits = text.substr(6, text.size() - 7);
    std::size_t used = 0;
    const int k = std::stoi(digits, &used);
    if (used != digits.size()) throw std::invalid_argument("bad selector " + text);
    return {Kind::kKcore, k};
  }
  throw std::invalid_argument("bad selector " + text);
}

namespace {

bool IsSeeded(const std::string& algo) { return algo == "rg" || algo == "random"; }
bool IsSpectral(const std::string& algo) { return algo == "spec-top" || algo == "isa"; }

std::string PolicyName(CandidatePolicy p) {
  return p == CandidatePolicy::kAll ? "all" : "peripheral";
}

CandidatePolicy ParsePolicy(const std::string& s) {
  if (s == "all") return CandidatePolicy::kAll;
  if (s == "peripheral") return CandidatePolicy::kPeripheral;
  throw std::invalid_argument("bad candidate policy " + s);
}

}  // namespace

void ValidateConfig(const ExperimentConfig& c) {
  static const char* kAlgos[] = {"greedy", "rg", "min-cep", "random", "spec-top", "isa"};
  bool known = false;
  for (const char* a : kAlgos) known = known || c.algorithm == a;
  if (!known) throw std::invalid_argument("unknown algorithm " + c.algorithm);
  if (c.budget < 0) throw std::invalid_argument("budget must be non-negative");
  if (c.selector.kind == TargetSelector::Kind::kKcore && c.selector.k < 1) {
    throw std::invalid_argument("k must be at least 1");
  }
  if (IsSeeded(c.algorithm) && !c.seed) {
    throw std::invalid_argument(c.algorithm + " needs a seed");
  }
}

std::optional<double> ComputeIb(int delta_before, int delta_after, int n) {
  if (delta_before > n || delta_after > n || delta_before < 0) {
    throw std::invalid_argument("balance values exceed node count");
  }
  if (n == delta_before) return std::nullopt;
  return 100.0 * (delta_after - delta_before) / (n - delta_before);
}

NodeSet SelectTarget(const SignedGraph& g, const TargetSelector& selector) {
  if (selector.kind == TargetSelector::Kind::kLcc) return LargestConnectedComponent(g);
  return KCore(g, selector.k);
}

namespace {

void RunSpectral(const SignedGraph& h, const BalancedState& state, const ExperimentConfig& config,
                 RunRecord& rec) {
  EdgeSet pool = config.candidates == CandidatePolicy::kAll ? AllEdges(h)
                                                            : PeripheralEdges(h, state);
  int b = config.budget;
  std::string note;
  if (b > static_cast<int>(pool.size())) {
    b = static_cast<int>(pool.size());
    note = "budget clamped to " + std::to_string(b) + " candidates";
  }
  SpectralOptions options;
  options.seed = config.seed.value_or(0);
  SolutionReport report;
  if (config.algorithm == "isa") {
    report = Isa(h, pool, b, options);
  } else {
    const auto start = std::chrono::steady_clock::now();
    report.algorithm = "spec-top";
    report.budget = b;
    try {
      report.lambda_trajectory.push_back(SmallestEigenpair(LaplacianView(h), options).lambda1);
      const EdgeSet chosen = SpecTop(h, pool, b, options);
      report.deleted.assign(chosen.begin(), chosen.end());
      if (b > 0) {
        report.lambda_trajectory.push_back(
            SmallestEigenpair(LaplacianView(h, chosen), options).lambda1);
      }
    } catch (const EigenSolveError& err) {
      report.stopped_early = true;
      report.note = err.what();
    }
    report.step_gains.assign(report.deleted.size(), 0);
    report.zero_gain_steps.assign(report.deleted.size(), 0);
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  report.budget = config.budget;
  const Replay replay = ReplayDeletions(h, state, report.deleted);
  report.delta_trajectory = replay.delta_trajectory;
  for (std::size_t i = 0; i < replay.admitted.size(); ++i) {
    report.step_gains[i] = replay.admitted[i];
    report.zero_gain_steps[i] = replay.admitted[i] == 0;
  }
  report.initial_delta = state.balanced_count();
  report.final_delta = replay.state.balanced_count();
  if (!note.empty()) report.note = report.note.empty() ? note : note + "; " + report.note;
  rec.report = std::move(report);
}

}  // namespace

RunRecord RunExperimentOnGraph(const SignedGraph& g, const ExperimentConfig& config) {
  ValidateConfig(config);
  RunRecord rec;
  rec.config = config;
  const NodeSet target = SelectTarget(g, config.selector);
  if (target.empty()) throw std::invalid_argument("target subgraph " + config.selector.ToString() + " is empty");
  const SignedGraph h = InducedSubgraph(g, target).graph;
  rec.n = h.node_count();
  rec.m = h.edge_count();

  BalancedState state;
  if (config.oracle && h.node_count() <= config.oracle_max_nodes) {
    state = CurrentBalanceExact(h, config.oracle_max_nodes);
    rec.delta0_source = "exact";
  } else {
    state = MaxBalancedHeuristic(h);
    rec.delta0_source = "heuristic";
  }
  rec.delta0 = state.balanced_count();

  const std::string& algo = config.algorithm;
  const int b = config.budget;
  if (IsSpectral(algo)) {
    RunSpectral(h, state, config, rec);
  } else {
    const EdgeSet all = AllEdges(h);
    if (algo == "greedy") rec.report = Greedy(h, state, all, b);
    if (algo == "rg") rec.report = RandomizedGreedy(h, state, all, b, *config.seed);
    if (algo == "min-cep") rec.report = MinCep(h, state, all, b);
    if (algo == "random") rec.report = RandomBaseline(h, state, all, b, *config.seed);
  }
  if (config.seed) rec.report.seed = config.seed;
  if (config.omit_timing) rec.report.seconds = 0.0;
  rec.delta_final = rec.report.final_delta;
  rec.ib_pct = ComputeIb(rec.delta0, rec.delta_final, rec.n);
  rec.already_balanced = !rec.ib_pct;

  if (config.oracle && b >= 1) {
    try {
      BruteForceLimits limits{config.oracle_max_subsets, config.oracle_max_nodes};
      const auto opt = BruteForceOpt(h, PeripheralEdges(h, state), b, limits);
      rec.delta_opt = opt.delta_opt;
      rec.report.delta_opt = opt.delta_opt;
      const long long psi =
          ComputePsi(h, MakeEdgeSet(rec.report.deleted), opt.best, config.oracle_max_nodes);
      if (psi >= 1) rec.report.psi = psi;
    } catch (const LimitExceeded& err) {
      rec.oracle_note = err.what();
    }
  }
  if (b >= 1) rec.bounds = GammaBounds(b, rec.delta_final, rec.delta_opt, rec.report.psi);
  return rec;
}

RunRecord RunExperiment(const ExperimentConfig& config) {
  ValidateConfig(config);
  LoadOptions options;
  options.sign_from_weight = config.sign_from_weight;
  return RunExperimentOnGraph(LoadEdgeListFile(config.dataset, options).graph, config);
}

std::vector<RunRecord> Sweep(const SignedGraph& g, const ExperimentConfig& base,
                             const std::vector<int>& budgets, const std::vector<int>& kcores) {
  std::vector<ExperimentConfig> cells;
  if (!kcores.empty()) {
    for (int k : kcores) {
      ExperimentConfig c = base;
      c.selector = {TargetSelector::Kind::kKcore, k};
      cells.push_back(c);
    }
  } else {
    for (int b : budgets) {
      ExperimentConfig c = base;
      c.budget = b;
      cells.push_back(c);
    }
  }
  std::vector<RunRecord> out;
  for (const auto& c : cells) {
    try {
      out.push_back(RunExperimentOnGraph(g, c));
    } catch (const std::exception& err) {
      RunRecord rec;
      rec.config = c;
      rec.error = err.what();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

namespace {

std::string Fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string DatasetName(const std::string& path) {
  return std::filesystem::path(path).filename().string();
}

}  // namespace

void WriteCsvHeader(std::ostream& out) {
  out << "dataset,selector,algorithm,b,n,m,delta0,delta_final,ib_pct,seconds,seed,gamma_II\n";
}

void WriteCsvRow(std::ostream& out, const RunRecord& r) {
  const auto& c = r.config;
  out << DatasetName(c.dataset) << ',' << c.selector.ToString() << ',' << c.algorithm << ','
      << c.budget << ',';
  if (!r.error.empty()) {
    out << ",,,,,," << (c.seed ? std::to_string(*c.seed) : "") << ",\n";
    return;
  }
  out << r.n << ',' << r.m << ',' << r.delta0 << ',' << r.delta_final << ','
      << (r.ib_pct ? Fixed(*r.ib_pct, 6) : "NA") << ',' << Fixed(r.report.seconds, 6) << ','
      << (c.seed ? std::to_string(*c.seed) : "") << ','
      << (r.bounds ? Fixed(r.bounds->gamma_II, 9) : "") << '\n';
}

// ---------------------------------------------------------------------------
// JSON.

namespace {

template <typename T>
json Opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> GetOpt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json ConfigJson(const ExperimentConfig& c) {
  return {{"dataset", c.dataset},
          {"selector", c.selector.ToString()},
          {"algorithm", c.algorithm},
          {"budget", c.budget},
          {"candidates", PolicyName(c.candidates)},
          {"seed", Opt(c.seed)},
          {"sign_from_weight", c.sign_from_weight},
          {"oracle", c.oracle},
          {"oracle_max_nodes", c.oracle_max_nodes},
          {"oracle_max_subsets", c.oracle_max_subsets},
          {"omit_timing", c.omit_timing}};
}

ExperimentConfig ConfigFromJson(const json& j) {
  ExperimentConfig c;
  c.dataset = j.at("dataset").get<std::string>();
  c.selector = TargetSelector::Parse(j.at("selector").get<std::string>());
  c.algorithm = j.at("algorithm").get<std::string>();
  c.budget = j.at("budget").get<int>();
  c.candidates = ParsePolicy(j.at("candidates").get<std::string>());
  c.seed = GetOpt<std::uint64_t>(j, "seed");
  c.sign_from_weight = j.at("sign_from_weight").get<bool>();
  c.oracle = j.at("oracle").get<bool>();
  c.oracle_max_nodes = j.at("oracle_max_nodes").get<int>();
  c.oracle_max_subsets = j.at("oracle_max_subsets").get<long long>();
  c.omit_timing = j.at("omit_timing").get<bool>();
  return c;
}

json ReportJson(const SolutionReport& r) {
  return {{"algorithm", r.algorithm},
          {"budget", r.budget},
          {"deleted", r.deleted},
          {"delta_trajectory", r.delta_trajectory},
          {"step_gains", r.step_gains},
          {"zero_gain_steps", r.zero_gain_steps},
          {"lambda_trajectory", r.lambda_trajectory},
          {"initial_delta", r.initial_delta},
          {"final_delta", r.final_delta},
          {"seed", Opt(r.seed)},
          {"seconds", r.seconds},
          {"stopped_early", r.stopped_early},
          {"note", r.note},
          {"delta_opt", Opt(r.delta_opt)},
          {"psi", Opt(r.psi)}};
}

SolutionReport ReportFromJson(const json& j) {
  SolutionReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.budget = j.at("budget").get<int>();
  r.deleted = j.at("deleted").get<std::vector<EdgeId>>();
  r.delta_trajectory = j.at("delta_trajectory").get<std::vector<int>>();
  r.step_gains = j.at("step_gains").get<std::vector<long long>>();
  r.zero_gain_steps = j.at("zero_gain_steps").get<std::vector<std::uint8_t>>();
  r.lambda_trajectory = j.at("lambda_trajectory").get<std::vector<double>>();
  r.initial_delta = j.at("initial_delta").get<int>();
  r.final_delta = j.at("final_delta").get<int>();
  r.seed = GetOpt<std::uint64_t>(j, "seed");
  r.seconds = j.at("seconds").get<double>();
  r.stopped_early = j.at("stopped_early").get<bool>();
  r.note = j.at("note").get<std::string>();
  r.delta_opt = GetOpt<int>(j, "delta_opt");
  r.psi = GetOpt<long long>(j, "psi");
  return r;
}

json BoundsJson(const BoundReport& b) {
  return {{"gamma_I", Opt(b.gamma_I)},   {"gamma_II", b.gamma_II},
          {"gamma_III", Opt(b.gamma_III)}, {"approx_I", Opt(b.approx_I)},
          {"approx_II", b.approx_II},    {"approx_III", Opt(b.approx_III)}};
}

BoundReport BoundsFromJson(const json& j) {
  BoundReport b;
  b.gamma_I = GetOpt<double>(j, "gamma_I");
  b.gamma_II = j.at("gamma_II").get<double>();
  b.gamma_III = GetOpt<double>(j, "gamma_III");
  b.approx_I = GetOpt<double>(j, "approx_I");
  b.approx_II = j.at("approx_II").get<double>();
  b.approx_III = GetOpt<double>(j, "approx_III");
  return b;
}

}  // namespace

std::string RecordToJson(const RunRecord& r, int indent) {
  json j = {{"config", ConfigJson(r.config)},
            {"n", r.n},
            {"m", r.m},
            {"delta0", r.delta0},
            {"delta0_source", r.delta0_source},
            {"delta_final", r.delta_final},
            {"ib_pct", Opt(r.ib_pct)},
            {"already_balanced", r.already_balanced},
            {"report", ReportJson(r.report)},
            {"bounds", r.bounds ? BoundsJson(*r.bounds) : json(nullptr)},
            {"delta_opt", Opt(r.delta_opt)},
            {"oracle_note", r.oracle_note},
            {"error", r.error}};
  return j.dump(indent);
}

RunRecord RecordFromJson(const std::string& text) {
  const json j = json::parse(text);
  RunRecord r;
  r.config = ConfigFromJson(j.at("config"));
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.delta0 = j.at("delta0").get<int>();
  r.delta0_source = j.at("delta0_source").get<std::string>();
  r.delta_final = j.at("delta_final").get<int>();
  r.ib_pct = GetOpt<double>(j, "ib_pct");
  r.already_balanced = j.at("already_balanced").get<bool>();
  r.report = ReportFromJson(j.at("report"));
  if (!j.at("bounds").is_null()) r.bounds = BoundsFromJson(j.at("bounds"));
  r.delta_opt = GetOpt<int>(j, "delta_opt");
  r.oracle_note = j.at("oracle_note").get<std::string>();
  r.error = j.at("error").get<std::string>();
  return r;
}

}  // namespace mbed
