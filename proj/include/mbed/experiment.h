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


// Experiment orchestration: target selection, algorithm dispatch, IB%,
// sweeps and record serialization.

#ifndef MBED_EXPERIMENT_H_
#define MBED_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mbed/bounds.h"
#include "mbed/graph.h"
#include "mbed/report.h"

namespace mbed {

struct TargetSelector {
  enum class Kind { kLcc, kKcore };
  Kind kind = Kind::kLcc;
  int k = 0;

  std::string ToString() const;  // "lcc" or "kcore(K)"
  static TargetSelector Parse(const std::string& text);
};

enum class CandidatePolicy { kAll, kPeripheral };

struct ExperimentConfig {
  std::string dataset;  // path; also names the CSV row
  TargetSelector selector;
  std::string algorithm = "greedy";  // greedy rg min-cep random spec-top isa
  int budget = 1;
  CandidatePolicy candidates = CandidatePolicy::kPeripheral;
  std::optional<std::uint64_t> seed;
  bool sign_from_weight = false;
  // Brute-force cross-check; also switches the initial state to the exact one.
  bool oracle = false;
  int oracle_max_nodes = 16;
  long long oracle_max_subsets = 200000;
  // Report 0 seconds so output is byte-stable.
  bool omit_timing = false;
};

// Rejects unknown algorithms, negative budgets, k < 1 and missing seeds.
void ValidateConfig(const ExperimentConfig& config);

struct RunRecord {
  ExperimentConfig config;
  int n = 0;
  int m = 0;
  int delta0 = 0;
  std::string delta0_source;  // "heuristic" or "exact"
  int delta_final = 0;
  std::optional<double> ib_pct;  // absent when already balanced
  bool already_balanced = false;
  SolutionReport report;
  std::optional<BoundReport> bounds;
  std::optional<int> delta_opt;
  std::string oracle_note;
  std::string error;  // set for failed sweep cells
};

// (after - before) / (n - before) * 100; nullopt when n == before.
std::optional<double> ComputeIb(int delta_before, int delta_after, int n);

// Nodes of the target subgraph H.
NodeSet SelectTarget(const SignedGraph& g, const TargetSelector& selector);

RunRecord RunExperiment(const ExperimentConfig& config);
RunRecord RunExperimentOnGraph(const SignedGraph& g, const ExperimentConfig& config);

// One cell per budget (or per k when `kcores` is non-empty). Cell errors
// are recorded and the sweep continues.
std::vector<RunRecord> Sweep(const SignedGraph& g, const ExperimentConfig& base,
                             const std::vector<int>& budgets, const std::vector<int>& kcores);

void WriteCsvHeader(std::ostream& out);
void WriteCsvRow(std::ostream& out, const RunRecord& record);

std::string RecordToJson(const RunRecord& record, int indent = 2);
RunRecord RecordFromJson(const std::string& text);

}  // namespace mbed

#endif  // MBED_EXPERIMENT_H_
