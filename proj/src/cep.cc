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

#include "mbed/cep.h"

#include <algorithm>

namespace mbed {

std::optional<SideEdgeCounts> CepIndex::find(NodeId x) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), x,
                             [](const CepEntry& e, NodeId id) { return e.node < id; });
  if (it == entries_.end() || it->node != x) return std::nullopt;
  return it->counts;
}

CepIndex BuildCepIndex(const SignedGraph& g, const BalancedState& state,
                       const DeletionMask* mask) {
  std::vector<CepEntry> entries;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (state.inside(x)) continue;
    SideEdgeCounts c = CountSideEdges(g, state, x, mask);
    if (c.total() > 0) entries.push_back({x, c});
  }
  return CepIndex(std::move(entries));
}

EdgeSet PeripheralEdges(const SignedGraph& g, const BalancedState& state,
                        const DeletionMask* mask) {
  EdgeSet out;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (mask && !mask->alive(id)) continue;
    const auto& e = g.edge(id);
    if (state.inside(e.u) != state.inside(e.v)) out.push_back(id);
  }
  return out;
}

NodeId ExteriorEndpoint(const SignedGraph& g, const BalancedState& state, EdgeId e) {
  const auto& edge = g.edge(e);
  const bool in_u = state.inside(edge.u), in_v = state.inside(edge.v);
  if (in_u == in_v) throw NotPeripheral("edge " + std::to_string(e) + " is not peripheral");
  return in_u ? edge.v : edge.u;
}

SideEdgeCounts CountsAfterDeletion(const SignedGraph& g, const BalancedState& state, EdgeId e,
                                   const DeletionMask* mask) {
  const NodeId x = ExteriorEndpoint(g, state, e);
  SideEdgeCounts c = CountSideEdges(g, state, x, mask);
  const auto& edge = g.edge(e);
  const Side s = state.side(edge.Other(x));
  const bool positive = edge.sign == Sign::kPositive;
  if (s == Side::kV1) {
    --(positive ? c.v1_pos : c.v1_neg);
  } else {
    --(positive ? c.v2_pos : c.v2_neg);
  }
  return c;
}

bool InContradictoryPair(const SignedGraph& g, const BalancedState& state, EdgeId e,
                         const DeletionMask* mask) {
  const auto& edge = g.edge(e);
  if (state.inside(edge.u) == state.inside(edge.v)) return false;
  if (mask && !mask->alive(e)) return false;
  const NodeId x = state.inside(edge.u) ? edge.v : edge.u;
  const SideEdgeCounts c = CountSideEdges(g, state, x, mask);
  // Edge e votes for the side its inner endpoint dictates; any vote for
  // the other side pairs with it.
  const Side inner = state.side(edge.Other(x));
  const bool votes_v1 = (inner == Side::kV1) == (edge.sign == Sign::kPositive);
  return votes_v1 ? c.votes_v2() > 0 : c.votes_v1() > 0;
}

int SimulateGain(const SignedGraph& g, DeletionMask& mask, BalancedState& state, EdgeId e) {
  const NodeId x = ExteriorEndpoint(g, state, e);
  if (!mask.alive(e)) throw NotPeripheral("edge " + std::to_string(e) + " already deleted");
  // Cheap rejection: x must become contradiction-free and stay attached.
  if (!CountsAfterDeletion(g, state, e, &mask).forced_side()) return 0;
  mask.Remove(e);
  const auto admitted = Cascade(g, &mask, state, std::span<const NodeId>(&x, 1));
  for (NodeId u : admitted) state.Evict(u);
  mask.Restore(e);
  return static_cast<int>(admitted.size());
}

int MarginalGain(const SignedGraph& g, const BalancedState& state, EdgeId e,
                 const DeletionMask* mask) {
  DeletionMask scratch_mask = mask ? *mask : DeletionMask(g.edge_count());
  BalancedState scratch = state;
  return SimulateGain(g, scratch_mask, scratch, e);
}

}  // namespace mbed
