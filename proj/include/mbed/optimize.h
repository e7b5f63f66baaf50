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


// Edge-deletion optimizers over the periphery of S(H) and the exhaustive
// optimum used as a test oracle.

#ifndef MBED_OPTIMIZE_H_
#define MBED_OPTIMIZE_H_

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mbed/balance.h"
#include "mbed/graph.h"
#include "mbed/report.h"

namespace mbed {

// Every edge id of g.
EdgeSet AllEdges(const SignedGraph& g);

// The peripheral optimizers share one contract: each step looks at the
// live peripheral edges inside `candidates`, deletes one, and commits the
// cascade. Running out of peripheral candidates ends the run early.
SolutionReport Greedy(const SignedGraph& g, const BalancedState& state, const EdgeSet& candidates,
                      int b);
SolutionReport RandomizedGreedy(const SignedGraph& g, const BalancedState& state,
                                const EdgeSet& candidates, int b, std::uint64_t seed);
SolutionReport MinCep(const SignedGraph& g, const BalancedState& state, const EdgeSet& candidates,
                      int b);
SolutionReport RandomBaseline(const SignedGraph& g, const BalancedState& state,
                              const EdgeSet& candidates, int b, std::uint64_t seed);

struct Replay {
  BalancedState state;
  DeletionMask mask;
  std::vector<int> delta_trajectory;
  std::vector<int> admitted;  // nodes admitted per step
};

// Pushes a deletion sequence through ApplyDeletion, in order.
Replay ReplayDeletions(const SignedGraph& g, const BalancedState& state,
                       const std::vector<EdgeId>& deleted);

struct BruteForceLimits {
  long long max_subsets = 200000;
  int max_nodes = 16;
};

struct BruteForceResult {
  EdgeSet best;
  int delta_opt = 0;
  long long subsets = 0;
};

// Maximizes exact Delta(H_B) over all B within candidates with |B| <= b.
// Ties go to the lexicographically smallest sorted id list. Throws
// LimitExceeded when the search would exceed `limits`.
BruteForceResult BruteForceOpt(const SignedGraph& g, const EdgeSet& candidates, int b,
                               const BruteForceLimits& limits = {});

}  // namespace mbed

#endif  // MBED_OPTIMIZE_H_
