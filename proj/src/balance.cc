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

#include "mbed/balance.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>

#include "mbed/spectral.h"

namespace mbed {

namespace {

// Bitmask adjacency for graphs of at most 32 nodes.
struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> neg;

  SmallGraph(const SignedGraph& g, const DeletionMask* mask) : n(g.node_count()), pos(n), neg(n) {
    for (EdgeId id = 0; id < g.edge_count(); ++id) {
      if (mask && !mask->alive(id)) continue;
      Toggle(g.edge(id));
    }
  }

  void Toggle(const SignedEdge& e) {
    auto& adj = e.sign == Sign::kPositive ? pos : neg;
    adj[e.u] ^= 1u << e.v;
    adj[e.v] ^= 1u << e.u;
  }

  // Two-colours the component of `start` inside `subset`. Returns the
  // component mask, or 0 on a sign conflict. `v2` receives the second side.
  std::uint32_t ColourComponent(std::uint32_t subset, int start, std::uint32_t* v2) const {
    std::uint32_t side_a = 1u << start, side_b = 0, visited = side_a, frontier = side_a;
    while (frontier) {
      int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint32_t same = pos[u] & subset, cross = neg[u] & subset;
      const bool in_a = (side_a >> u) & 1u;
      std::uint32_t& mine = in_a ? side_a : side_b;
      std::uint32_t& other = in_a ? side_b : side_a;
      if ((same & other) || (cross & mine)) return 0;
      std::uint32_t fresh_same = same & ~visited, fresh_cross = cross & ~visited;
      mine |= fresh_same;
      other |= fresh_cross;
      visited |= fresh_same | fresh_cross;
      frontier |= fresh_same | fresh_cross;
    }
    if (v2) *v2 = side_b;
    return visited;
  }

  bool ConnectedBalanced(std::uint32_t subset, std::uint32_t* v2 = nullptr) const {
    if (!subset) return true;
    return ColourComponent(subset, std::countr_zero(subset), v2) == subset;
  }

  bool Balanced(std::uint32_t subset) const {
    std::uint32_t left = subset;
    while (left) {
      std::uint32_t comp = ColourComponent(subset, std::countr_zero(left), nullptr);
      if (!comp) return false;
      left &= ~comp;
    }
    return true;
  }
};

// Visits k-subsets of {0..n-1} in lexicographic order until `visit` returns true.
template <typename Visit>
bool ForEachCombination(int n, int k, Visit&& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  while (true) {
    if (visit(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint32_t MaskOf(const std::vector<int>& idx) {
  std::uint32_t m = 0;
  for (int i : idx) m |= 1u << i;
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------

BalanceCheck CheckBalance(const SignedGraph& g, std::span<const std::uint8_t> member,
                          const DeletionMask* mask) {
  const int n = g.node_count();
  std::vector<Side> side(n, Side::kOut);
  std::vector<EdgeId> parent_edge(n, -1);
  std::vector<int> depth(n, 0);
  std::vector<NodeId> queue;
  queue.reserve(n);
  for (NodeId root = 0; root < n; ++root) {
    if (!member[root] || side[root] != Side::kOut) continue;
    side[root] = Side::kV1;
    queue.clear();
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      const NodeId u = queue[head];
      for (const auto& a : g.neighbors(u)) {
        if (mask && !mask->alive(a.edge)) continue;
        const NodeId w = a.neighbor;
        if (!member[w]) continue;
        const Side want = a.sign == Sign::kPositive ? side[u] : Opposite(side[u]);
        if (side[w] == Side::kOut) {
          side[w] = want;
          parent_edge[w] = a.edge;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (side[w] != want) {
          // Fundamental cycle: tree paths from u and w to their meeting point.
          EdgeSet cycle{a.edge};
          NodeId x = u, y = w;
          auto up = [&](NodeId& z) {
            cycle.push_back(parent_edge[z]);
            z = g.edge(parent_edge[z]).Other(z);
          };
          while (depth[x] > depth[y]) up(x);
          while (depth[y] > depth[x]) up(y);
          while (x != y) {
            up(x);
            up(y);
          }
          return {std::nullopt, MakeEdgeSet(std::move(cycle))};
        }
      }
    }
  }
  return {Bipartition{std::move(side)}, {}};
}

BalanceCheck CheckBalance(const SignedGraph& g, const DeletionMask* mask) {
  std::vector<std::uint8_t> all(g.node_count(), 1);
  return CheckBalance(g, all, mask);
}

SignedGraph ApplySwitching(const SignedGraph& g, const SwitchingFunction& theta) {
  if (static_cast<int>(theta.theta.size()) != g.node_count()) {
    throw std::invalid_argument("switching function must cover every node");
  }
  std::vector<SignedEdge> edges(g.edges().begin(), g.edges().end());
  for (auto& e : edges) e.sign = Multiply(Multiply(theta.theta[e.u], e.sign), theta.theta[e.v]);
  return SignedGraph(g.node_count(), std::move(edges), g.labels());
}

SwitchingFunction SwitchingFromPartition(const Bipartition& p) {
  SwitchingFunction t;
  t.theta.reserve(p.side.size());
  for (Side s : p.side) t.theta.push_back(s == Side::kV2 ? Sign::kNegative : Sign::kPositive);
  return t;
}

FrustrationReport FrustrationExact(const SignedGraph& g, const FrustrationLimits& limits) {
  const int n = g.node_count(), m = g.edge_count();
  if (n > limits.max_nodes || n > 32) {
    throw LimitExceeded("frustration number needs at most " + std::to_string(limits.max_nodes) +
                        " nodes, got " + std::to_string(n));
  }
  if (m > limits.max_edges) {
    throw LimitExceeded("frustration index needs at most " + std::to_string(limits.max_edges) +
                        " edges, got " + std::to_string(m));
  }
  SmallGraph sg(g, nullptr);
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  FrustrationReport report;

  for (int k = 0; k <= n; ++k) {
    bool found = ForEachCombination(n, k, [&](const std::vector<int>& idx) {
      if (!sg.Balanced(all & ~MaskOf(idx))) return false;
      report.nu = k;
      report.witness_nodes.assign(idx.begin(), idx.end());
      return true;
    });
    if (found) break;
  }
  for (int k = 0; k <= m; ++k) {
    bool found = ForEachCombination(m, k, [&](const std::vector<int>& idx) {
      for (int e : idx) sg.Toggle(g.edge(e));
      const bool ok = sg.Balanced(all);
      for (int e : idx) sg.Toggle(g.edge(e));
      if (!ok) return false;
      report.epsilon = k;
      report.witness_edges.assign(idx.begin(), idx.end());
      return true;
    });
    if (found) break;
  }
  return report;
}

// ---------------------------------------------------------------------------

BalancedState::BalancedState(std::vector<Side> labels) : labels_(std::move(labels)) {
  count_ = static_cast<int>(
      std::count_if(labels_.begin(), labels_.end(), [](Side s) { return s != Side::kOut; }));
}

NodeId BalancedState::anchor() const {
  for (NodeId u = 0; u < node_count(); ++u) {
    if (inside(u)) return u;
  }
  return -1;
}

NodeSet BalancedState::Members() const {
  NodeSet out;
  for (NodeId u = 0; u < node_count(); ++u) {
    if (inside(u)) out.push_back(u);
  }
  return out;
}

void BalancedState::Admit(NodeId u, Side s) {
  if (s == Side::kOut) throw std::invalid_argument("cannot admit to the Out side");
  if (labels_[u] == Side::kOut) ++count_;
  labels_[u] = s;
}

void BalancedState::Evict(NodeId u) {
  if (labels_[u] != Side::kOut) --count_;
  labels_[u] = Side::kOut;
}

SideEdgeCounts CountSideEdges(const SignedGraph& g, const BalancedState& state, NodeId x,
                              const DeletionMask* mask) {
  SideEdgeCounts c;
  for (const auto& a : g.neighbors(x)) {
    if (mask && !mask->alive(a.edge)) continue;
    const Side s = state.side(a.neighbor);
    if (s == Side::kOut) continue;
    const bool positive = a.sign == Sign::kPositive;
    if (s == Side::kV1) {
      ++(positive ? c.v1_pos : c.v1_neg);
    } else {
      ++(positive ? c.v2_pos : c.v2_neg);
    }
  }
  return c;
}

bool IsValidState(const SignedGraph& g, const BalancedState& state, const DeletionMask* mask) {
  if (state.node_count() != g.node_count()) return false;
  std::vector<std::uint8_t> member(g.node_count());
  int count = 0;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    member[u] = state.inside(u);
    count += member[u];
  }
  if (count != state.balanced_count()) return false;
  if (count == 0) return true;
  if (ConnectedComponents(g, member, mask).count() != 1) return false;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (mask && !mask->alive(id)) continue;
    const auto& e = g.edge(id);
    if (!member[e.u] || !member[e.v]) continue;
    const bool same = state.side(e.u) == state.side(e.v);
    if (same != (e.sign == Sign::kPositive)) return false;
  }
  return true;
}

namespace {

// Largest connected balanced node subset as a bitmask; lexicographically
// smallest among maxima. `v2` receives the nodes on the second side.
std::uint32_t ExactMaxSubset(const SignedGraph& g, const DeletionMask* mask, int max_nodes,
                             std::uint32_t* v2) {
  const int n = g.node_count();
  if (n > max_nodes || n > 32) {
    throw LimitExceeded("exact balance needs at most " + std::to_string(max_nodes) +
                        " nodes, got " + std::to_string(n));
  }
  SmallGraph sg(g, mask);
  std::uint32_t best = 0;
  for (int k = n; k >= 1; --k) {
    bool found = ForEachCombination(n, k, [&](const std::vector<int>& idx) {
      const std::uint32_t subset = MaskOf(idx);
      if (!sg.ConnectedBalanced(subset, v2)) return false;
      best = subset;
      return true;
    });
    if (found) break;
  }
  return best;
}

}  // namespace

BalancedState CurrentBalanceExact(const SignedGraph& g, int max_nodes, const DeletionMask* mask) {
  std::uint32_t v2 = 0;
  const std::uint32_t best = ExactMaxSubset(g, mask, max_nodes, &v2);
  BalancedState state(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if ((best >> u) & 1u) state.Admit(u, ((v2 >> u) & 1u) ? Side::kV2 : Side::kV1);
  }
  return state;
}

int ExactDelta(const SignedGraph& g, const DeletionMask* mask, int max_nodes) {
  return std::popcount(ExactMaxSubset(g, mask, max_nodes, nullptr));
}

std::vector<NodeId> Cascade(const SignedGraph& g, const DeletionMask* mask, BalancedState& state,
                            std::span<const NodeId> seeds) {
  std::vector<NodeId> admitted;
  if (state.balanced_count() == 0) return admitted;
  std::deque<NodeId> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    if (state.inside(x)) continue;
    const auto forced = CountSideEdges(g, state, x, mask).forced_side();
    if (!forced) continue;
    state.Admit(x, *forced);
    admitted.push_back(x);
    for (const auto& a : g.neighbors(x)) {
      if (mask && !mask->alive(a.edge)) continue;
      if (!state.inside(a.neighbor)) queue.push_back(a.neighbor);
    }
  }
  return admitted;
}

BalancedState ExpandState(const SignedGraph& g, BalancedState state, const DeletionMask* mask) {
  std::vector<NodeId> seeds;
  for (NodeId x = 0; x < g.node_count(); ++x) {
    if (state.inside(x)) continue;
    for (const auto& a : g.neighbors(x)) {
      if ((!mask || mask->alive(a.edge)) && state.inside(a.neighbor)) {
        seeds.push_back(x);
        break;
      }
    }
  }
  Cascade(g, mask, state, seeds);
  return state;
}

BalancedState MaxBalancedHeuristic(const SignedGraph& g, const DeletionMask* mask) {
  const int n = g.node_count();
  BalancedState state(n);
  if (n == 0) return state;
  DeletionMask live = mask ? *mask : DeletionMask(g.edge_count());

  EigenPair eig;
  try {
    eig = SmallestEigenpair(LaplacianView(g, live));
  } catch (const EigenSolveError& err) {
    eig = err.best();  // any sign pattern is a valid starting point
  }
  std::vector<Sign> theta(n);
  for (NodeId u = 0; u < n; ++u) theta[u] = eig.v(u) < 0 ? Sign::kNegative : Sign::kPositive;

  // Negative edges per node after switching; peel the worst node first.
  std::vector<int> negatives(n, 0);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (!live.alive(id)) continue;
    const auto& e = g.edge(id);
    if (Multiply(Multiply(theta[e.u], e.sign), theta[e.v]) == Sign::kNegative) {
      ++negatives[e.u];
      ++negatives[e.v];
    }
  }
  std::set<std::pair<int, NodeId>> order;  // (-negatives, id)
  for (NodeId u = 0; u < n; ++u) order.insert({-negatives[u], u});
  std::vector<std::uint8_t> member(n, 1);
  BalanceCheck check = CheckBalance(g, member, &live);
  while (!check.balanced()) {
    const NodeId worst = order.begin()->second;
    order.erase(order.begin());
    member[worst] = 0;
    for (const auto& a : g.neighbors(worst)) {
      if (!live.alive(a.edge) || !member[a.neighbor]) continue;
      if (Multiply(Multiply(theta[worst], a.sign), theta[a.neighbor]) == Sign::kNegative) {
        order.erase({-negatives[a.neighbor], a.neighbor});
        --negatives[a.neighbor];
        order.insert({-negatives[a.neighbor], a.neighbor});
      }
    }
    check = CheckBalance(g, member, &live);
  }

  const Components comps = ConnectedComponents(g, member, &live);
  if (comps.count() == 0) return state;
  const int best =
      static_cast<int>(std::max_element(comps.size.begin(), comps.size.end()) - comps.size.begin());
  for (NodeId u = 0; u < n; ++u) {
    if (comps.id[u] == best) state.Admit(u, check.partition->side[u]);
  }
  return ExpandState(g, std::move(state), &live);
}

std::vector<NodeId> ApplyDeletion(const SignedGraph& g, DeletionMask& mask, BalancedState& state,
                                  EdgeId e) {
  const auto& edge = g.edge(e);
  mask.Remove(e);
  const bool in_u = state.inside(edge.u), in_v = state.inside(edge.v);
  if (!in_u && !in_v) return {};
  if (in_u != in_v) {
    const NodeId x = in_u ? edge.v : edge.u;
    return Cascade(g, &mask, state, std::span<const NodeId>(&x, 1));
  }
  // Internal edge: S stays balanced but may split.
  std::vector<std::uint8_t> member(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) member[u] = state.inside(u);
  const Components comps = ConnectedComponents(g, member, &mask);
  if (comps.count() > 1) {
    const int best = static_cast<int>(std::max_element(comps.size.begin(), comps.size.end()) -
                                      comps.size.begin());
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (member[u] && comps.id[u] != best) state.Evict(u);
    }
  }
  BalancedState before = state;
  state = ExpandState(g, std::move(state), &mask);
  std::vector<NodeId> admitted;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (state.inside(u) && !before.inside(u)) admitted.push_back(u);
  }
  return admitted;
}

void WriteState(std::ostream& out, const SignedGraph& g, const BalancedState& state) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    out << g.label(u) << ' ' << static_cast<int>(state.side(u)) << '\n';
  }
}

BalancedState ReadState(std::istream& in, const SignedGraph& g) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId u = 0; u < g.node_count(); ++u) index[g.label(u)] = u;
  BalancedState state(g.node_count());
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream tokens(line);
    std::string label;
    int side = -1;
    if (!(tokens >> label)) continue;
    if (!(tokens >> side) || side < 0 || side > 2) {
      throw ParseError(line_number, "expected '<label> <0|1|2>'");
    }
    auto it = index.find(label);
    if (it == index.end()) throw ParseError(line_number, "unknown node '" + label + "'");
    if (side != 0) state.Admit(it->second, static_cast<Side>(side));
  }
  return state;
}

}  // namespace mbed
