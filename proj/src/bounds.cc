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


#include "mbed/bounds.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mbed/optimize.h"

namespace mbed {

namespace {

double Gamma(double psi, int delta, int b) { return 4.0 * psi / (4.0 * psi + delta * (b - 1.0)); }

double Approx(double gamma) { return 1.0 - std::exp(-gamma); }

int DeltaWithout(const SignedGraph& g, const EdgeSet& removed, int max_nodes) {
  const DeletionMask mask(g.edge_count(), removed);
  return ExactDelta(g, &mask, max_nodes);
}

EdgeSet Union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

long long CepAt(const SignedGraph& g, const Replay& r, NodeId x) {
  if (r.state.inside(x)) return 0;
  return CountSideEdges(g, r.state, x, &r.mask).cep_count();
}

}  // namespace

BoundReport GammaBounds(int b, int delta_alg, std::optional<int> delta_opt,
                        std::optional<long long> psi) {
  if (b < 1) throw std::invalid_argument("bounds need b >= 1");
  if (delta_alg < 0 || (delta_opt && *delta_opt < 0)) {
    throw std::invalid_argument("balance values must be non-negative");
  }
  if (psi && *psi < 1) throw std::invalid_argument("psi must be at least 1");
  BoundReport r;
  if (delta_opt) {
    r.gamma_I = Gamma(1.0, *delta_opt, b);
    r.approx_I = Approx(*r.gamma_I);
  }
  r.gamma_II = Gamma(1.0, delta_alg, b);
  r.approx_II = Approx(r.gamma_II);
  if (psi) {
    r.gamma_III = Gamma(static_cast<double>(*psi), delta_alg, b);
    r.approx_III = Approx(*r.gamma_III);
  }
  return r;
}

long long ComputePsi(const SignedGraph& g, const EdgeSet& alg, const EdgeSet& opt,
                     int max_nodes) {
  const EdgeSet base = MakeEdgeSet(alg);
  const int delta_base = DeltaWithout(g, base, max_nodes);
  long long psi = 0;
  for (EdgeId e : MakeEdgeSet(opt)) {
    if (std::binary_search(base.begin(), base.end(), e)) continue;
    psi += DeltaWithout(g, Union(base, {e}), max_nodes) - delta_base;
  }
  return psi;
}

PseudoSubmodularity PseudoSubmodularityCheck(const SignedGraph& g, const BalancedState& state,
                                             const EdgeSet& q_in, const EdgeSet& r_in,
                                             GainModel model, int max_nodes) {
  const EdgeSet q = MakeEdgeSet(q_in), r = MakeEdgeSet(r_in);
  if (r.empty()) throw std::invalid_argument("R must be non-empty");
  for (EdgeId e : r) {
    if (std::binary_search(q.begin(), q.end(), e)) {
      throw std::invalid_argument("Q and R must be disjoint");
    }
  }
  // Delta after deleting Q and then `extra`.
  auto delta = [&](const EdgeSet& extra) {
    if (model == GainModel::kExact) return DeltaWithout(g, Union(q, extra), max_nodes);
    std::vector<EdgeId> order(q.begin(), q.end());
    order.insert(order.end(), extra.begin(), extra.end());
    return ReplayDeletions(g, state, order).state.balanced_count();
  };
  PseudoSubmodularity out;
  out.delta_q = delta({});
  for (EdgeId e : r) out.lhs += delta({e}) - out.delta_q;
  out.rhs = delta(r) - out.delta_q;
  out.gamma_bound = 1.0 / (1.0 + 0.25 * out.delta_q * (static_cast<double>(r.size()) - 1.0));
  out.holds = static_cast<double>(out.lhs) >= out.gamma_bound * out.rhs - 1e-12;
  return out;
}

InductionBound CheckInductionBound(const SignedGraph& g, const BalancedState& state,
                                   const std::vector<EdgeId>& b, int max_nodes) {
  if (b.empty()) throw std::invalid_argument("B must be non-empty");
  if (b.size() > 20) throw LimitExceeded("induction check needs |B| <= 20");
  InductionBound out;
  out.delta = ExactDelta(g, nullptr, max_nodes);
  out.f_b = DeltaWithout(g, MakeEdgeSet(b), max_nodes) - out.delta;
  for (EdgeId e : b) out.singleton_sum += DeltaWithout(g, {e}, max_nodes) - out.delta;

  // C*: largest cascade admitted alongside one node while replaying B.
  const Replay full = ReplayDeletions(g, state, b);
  for (int admitted : full.admitted) out.c_star = std::max(out.c_star, admitted - 1);

  std::vector<Replay> singles;
  for (EdgeId e : b) singles.push_back(ReplayDeletions(g, state, {e}));
  const std::uint32_t subsets = 1u << b.size();
  std::vector<Replay> replays;
  for (std::uint32_t y = 1; y < subsets; ++y) {
    std::vector<EdgeId> order;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if ((y >> i) & 1u) order.push_back(b[i]);
    }
    replays.push_back(ReplayDeletions(g, state, order));
  }
  for (NodeId x = 0; x < g.node_count(); ++x) {
    const bool blocked =
        std::all_of(singles.begin(), singles.end(), [&](const Replay& r) { return CepAt(g, r, x) > 0; });
    if (!blocked) continue;
    const bool freed =
        std::any_of(replays.begin(), replays.end(), [&](const Replay& r) { return CepAt(g, r, x) == 0; });
    if (freed) ++out.alpha;
  }

  out.bound_holds = out.f_b <= out.singleton_sum + static_cast<long long>(out.c_star + 1) * out.alpha;
  out.f_b_state = full.state.balanced_count() - state.balanced_count();
  for (const Replay& r : singles) out.singleton_sum_state += r.state.balanced_count() - state.balanced_count();
  out.state_bound_holds = out.f_b_state <= out.singleton_sum_state +
                                               static_cast<long long>(out.c_star + 1) * out.alpha;
  out.c_star_holds = 2 * (out.c_star + 1) <= out.delta;
  out.alpha_holds = 2 * out.alpha <= static_cast<int>(b.size()) - 1;
  return out;
}

}  // namespace mbed
