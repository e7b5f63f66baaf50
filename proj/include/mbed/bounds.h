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


// Approximation-ratio bounds and the exact checks behind them.

#ifndef MBED_BOUNDS_H_
#define MBED_BOUNDS_H_

#include <optional>
#include <vector>

#include "mbed/balance.h"
#include "mbed/graph.h"

namespace mbed {

struct BoundReport {
  std::optional<double> gamma_I;  // from the optimum's Delta*
  double gamma_II = 1.0;          // from the algorithm's own final Delta
  std::optional<double> gamma_III;  // psi-refined
  std::optional<double> approx_I;
  double approx_II = 0.0;
  std::optional<double> approx_III;
};

// gamma = 4 psi / (4 psi + Delta (b - 1)), psi = 1 for the first two.
// Requires b >= 1, non-negative deltas and psi >= 1.
BoundReport GammaBounds(int b, int delta_alg, std::optional<int> delta_opt = std::nullopt,
                        std::optional<long long> psi = std::nullopt);

// Sum over e in opt of Delta(H_{alg + e}) - Delta(H_alg), exact.
long long ComputePsi(const SignedGraph& g, const EdgeSet& alg, const EdgeSet& opt,
                     int max_nodes = 16);

// How f is evaluated: exact Delta of the edited graph, or the size of the
// state obtained by replaying the deletions (Q first, then the rest, each
// group in ascending id order) through ApplyDeletion.
enum class GainModel { kExact, kMaintainedState };

struct PseudoSubmodularity {
  long long lhs = 0;  // sum over e in R of f(Q + e) - f(Q)
  long long rhs = 0;  // f(Q + R) - f(Q)
  int delta_q = 0;
  double gamma_bound = 1.0;
  bool holds = true;
};

PseudoSubmodularity PseudoSubmodularityCheck(const SignedGraph& g, const BalancedState& state,
                                             const EdgeSet& q, const EdgeSet& r,
                                             GainModel model = GainModel::kExact,
                                             int max_nodes = 16);

struct InductionBound {
  long long f_b = 0;            // exact f(B)
  long long singleton_sum = 0;  // sum of exact f({e_i})
  int c_star = 0;
  int alpha = 0;
  int delta = 0;  // exact Delta(H)
  bool bound_holds = true;   // f(B) <= sum + (C* + 1) alpha
  // The same inequality with f taken from replayed states.
  long long f_b_state = 0;
  long long singleton_sum_state = 0;
  bool state_bound_holds = true;
  bool c_star_holds = true;  // C* + 1 <= Delta / 2
  bool alpha_holds = true;   // alpha <= (|B| - 1) / 2
};

// `b` is the deletion sequence in order. C* is the largest cascade
// admitted with one node when replaying b (minus that node). alpha counts
// nodes whose cep stays non-empty after every single deletion but becomes
// empty after some non-empty subset of b.
InductionBound CheckInductionBound(const SignedGraph& g, const BalancedState& state,
                                   const std::vector<EdgeId>& b, int max_nodes = 16);

}  // namespace mbed

#endif  // MBED_BOUNDS_H_
