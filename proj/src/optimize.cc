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


#include "mbed/optimize.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <string>

#include "mbed/cep.h"

namespace mbed {

EdgeSet AllEdges(const SignedGraph& g) {
  EdgeSet all(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
  return all;
}

namespace {

struct Pick {
  EdgeId edge;
  long long credit;
};

// Chooses one edge among the (non-empty, ascending) live candidates.
using Selector = std::function<Pick(const EdgeSet& live, DeletionMask& mask, BalancedState& state)>;

SolutionReport RunPeripheral(const SignedGraph& g, const BalancedState& initial,
                             const EdgeSet& candidates, int b, const std::string& name,
                             const Selector& select) {
  if (b < 0) throw std::invalid_argument("budget must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::uint8_t> allowed(g.edge_count(), 0);
  for (EdgeId e : candidates) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("unknown candidate edge " + std::to_string(e));
    allowed[e] = 1;
  }
  SolutionReport report;
  report.algorithm = name;
  report.budget = b;
  report.initial_delta = initial.balanced_count();
  BalancedState state = initial;
  DeletionMask mask(g.edge_count());
  for (int step = 0; step < b; ++step) {
    EdgeSet live;
    for (EdgeId e : PeripheralEdges(g, state, &mask)) {
      if (allowed[e]) live.push_back(e);
    }
    if (live.empty()) {
      report.stopped_early = true;
      report.note = "no peripheral candidates after " + std::to_string(step) + " steps";
      break;
    }
    const Pick pick = select(live, mask, state);
    const auto admitted = ApplyDeletion(g, mask, state, pick.edge);
    report.deleted.push_back(pick.edge);
    report.step_gains.push_back(pick.credit);
    report.zero_gain_steps.push_back(admitted.empty() ? 1 : 0);
    report.delta_trajectory.push_back(state.balanced_count());
  }
  report.final_delta = state.balanced_count();
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

struct Gain {
  int gain;
  EdgeId edge;
};

bool GainBefore(const Gain& a, const Gain& b) {
  return a.gain != b.gain ? a.gain > b.gain : a.edge < b.edge;
}

std::vector<Gain> AllGains(const SignedGraph& g, const EdgeSet& live, DeletionMask& mask,
                           BalancedState& state) {
  std::vector<Gain> gains;
  gains.reserve(live.size());
  for (EdgeId e : live) gains.push_back({SimulateGain(g, mask, state, e), e});
  return gains;
}

}  // namespace

SolutionReport Greedy(const SignedGraph& g, const BalancedState& state, const EdgeSet& candidates,
                      int b) {
  return RunPeripheral(g, state, candidates, b, "greedy",
                       [&g](const EdgeSet& live, DeletionMask& mask, BalancedState& s) {
                         const auto gains = AllGains(g, live, mask, s);
                         const Gain best = *std::min_element(gains.begin(), gains.end(), GainBefore);
                         return Pick{best.edge, best.gain};
                       });
}

SolutionReport RandomizedGreedy(const SignedGraph& g, const BalancedState& state,
                                const EdgeSet& candidates, int b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto report = RunPeripheral(
      g, state, candidates, b, "rg",
      [&g, &rng, b](const EdgeSet& live, DeletionMask& mask, BalancedState& s) {
        auto gains = AllGains(g, live, mask, s);
        const int top = std::min<int>(b, static_cast<int>(gains.size()));
        std::partial_sort(gains.begin(), gains.begin() + top, gains.end(), GainBefore);
        std::uniform_int_distribution<int> pick(0, top - 1);
        const Gain chosen = gains[pick(rng)];
        return Pick{chosen.edge, chosen.gain};
      });
  report.seed = seed;
  return report;
}

SolutionReport MinCep(const SignedGraph& g, const BalancedState& state, const EdgeSet& candidates,
                      int b) {
  return RunPeripheral(g, state, candidates, b, "min-cep",
                       [&g](const EdgeSet& live, DeletionMask& mask, BalancedState& s) {
                         Pick best{-1, 0};
                         for (EdgeId e : live) {
                           const long long left = CountsAfterDeletion(g, s, e, &mask).cep_count();
                           if (best.edge < 0 || left < best.credit) best = {e, left};
                         }
                         return best;
                       });
}

SolutionReport RandomBaseline(const SignedGraph& g, const BalancedState& state,
                              const EdgeSet& candidates, int b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto report = RunPeripheral(g, state, candidates, b, "random",
                              [&rng](const EdgeSet& live, DeletionMask&, BalancedState&) {
                                std::uniform_int_distribution<int> pick(
                                    0, static_cast<int>(live.size()) - 1);
                                return Pick{live[pick(rng)], 0};
                              });
  report.seed = seed;
  return report;
}

Replay ReplayDeletions(const SignedGraph& g, const BalancedState& state,
                       const std::vector<EdgeId>& deleted) {
  Replay r{state, DeletionMask(g.edge_count()), {}, {}};
  for (EdgeId e : deleted) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("unknown edge " + std::to_string(e));
    if (!r.mask.alive(e)) throw GraphError("edge " + std::to_string(e) + " deleted twice");
    const auto admitted = ApplyDeletion(g, r.mask, r.state, e);
    r.admitted.push_back(static_cast<int>(admitted.size()));
    r.delta_trajectory.push_back(r.state.balanced_count());
  }
  return r;
}

namespace {

long long Binomial(int n, int k) {
  long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > (1LL << 50)) return c;
  }
  return c;
}

}  // namespace

BruteForceResult BruteForceOpt(const SignedGraph& g, const EdgeSet& candidates, int b,
                               const BruteForceLimits& limits) {
  if (b < 0) throw std::invalid_argument("budget must be non-negative");
  if (g.node_count() > limits.max_nodes) {
    throw LimitExceeded("brute force needs at most " + std::to_string(limits.max_nodes) +
                        " nodes, got " + std::to_string(g.node_count()));
  }
  const EdgeSet pool = MakeEdgeSet(candidates);
  for (EdgeId e : pool) {
    if (e < 0 || e >= g.edge_count()) throw GraphError("unknown candidate edge " + std::to_string(e));
  }
  const int c = static_cast<int>(pool.size());
  const int top = std::min(b, c);
  long long total = 0;
  for (int k = 0; k <= top; ++k) {
    total += Binomial(c, k);
    if (total > limits.max_subsets) {
      throw LimitExceeded("brute force over more than " + std::to_string(limits.max_subsets) +
                          " subsets");
    }
  }

  BruteForceResult result;
  result.delta_opt = -1;
  DeletionMask mask(g.edge_count());
  std::vector<int> idx;
  // Depth-first over index combinations visits sets in lexicographic order,
  // so the first maximizer found is the lexicographically smallest.
  std::function<void(int)> visit = [&](int next) {
    ++result.subsets;
    const int delta = ExactDelta(g, &mask, limits.max_nodes);
    if (delta > result.delta_opt) {
      result.delta_opt = delta;
      result.best.clear();
      for (int i : idx) result.best.push_back(pool[i]);
    }
    if (static_cast<int>(idx.size()) == top) return;
    for (int i = next; i < c; ++i) {
      idx.push_back(i);
      mask.Remove(pool[i]);
      visit(i + 1);
      mask.Restore(pool[i]);
      idx.pop_back();
    }
  };
  visit(0);
  return result;
}

}  // namespace mbed
