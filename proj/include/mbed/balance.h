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

// Structural balance: detection, switching, exact small-instance oracles and
// the maintained connected balanced subgraph.

#ifndef MBED_BALANCE_H_
#define MBED_BALANCE_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mbed/graph.h"

namespace mbed {

enum class Side : std::uint8_t { kOut = 0, kV1 = 1, kV2 = 2 };

inline Side Opposite(Side s) {
  return s == Side::kV1 ? Side::kV2 : (s == Side::kV2 ? Side::kV1 : Side::kOut);
}

struct Bipartition {
  std::vector<Side> side;  // kV1 or kV2 for every node of the checked graph
};

struct BalanceCheck {
  std::optional<Bipartition> partition;
  // Negative cycle (edge ids) proving imbalance; empty when balanced.
  EdgeSet witness_cycle;

  bool balanced() const { return partition.has_value(); }
};

// BFS two-colouring; every component root gets kV1. The witness is the
// fundamental cycle of the first edge that contradicts the colouring.
BalanceCheck CheckBalance(const SignedGraph& g, const DeletionMask* mask = nullptr);

// Restricted to the subgraph induced by member[u] != 0; non-members get kOut.
BalanceCheck CheckBalance(const SignedGraph& g, std::span<const std::uint8_t> member,
                          const DeletionMask* mask = nullptr);

struct SwitchingFunction {
  std::vector<Sign> theta;
};

// sigma'(u, v) = theta(u) * sigma(u, v) * theta(v).
SignedGraph ApplySwitching(const SignedGraph& g, const SwitchingFunction& theta);

// The indicator that maps a balanced graph onto its all-positive switch.
SwitchingFunction SwitchingFromPartition(const Bipartition& p);

class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FrustrationLimits {
  int max_nodes = 16;
  int max_edges = 20;
};

struct FrustrationReport {
  int nu = 0;       // frustration number (vertex deletions)
  int epsilon = 0;  // frustration index (edge deletions)
  NodeSet witness_nodes;
  EdgeSet witness_edges;
};

// Exhaustive search in increasing cardinality; the lexicographically
// smallest witness of minimum size is returned. Throws LimitExceeded.
FrustrationReport FrustrationExact(const SignedGraph& g, const FrustrationLimits& limits = {});

// Sign counts of a node's edges into the two sides of a balanced set.
struct SideEdgeCounts {
  int v1_pos = 0;
  int v1_neg = 0;
  int v2_pos = 0;
  int v2_neg = 0;

  int total() const { return v1_pos + v1_neg + v2_pos + v2_neg; }
  // Edges that force the node into V1 / V2 respectively.
  int votes_v1() const { return v1_pos + v2_neg; }
  int votes_v2() const { return v1_neg + v2_pos; }
  // Number of contradictory edge pairs at the node.
  long long cep_count() const {
    return static_cast<long long>(v1_pos) * v2_pos + static_cast<long long>(v1_neg) * v2_neg +
           static_cast<long long>(v1_pos) * v1_neg + static_cast<long long>(v2_pos) * v2_neg;
  }
  // Side the node must take, if its edges agree on one.
  std::optional<Side> forced_side() const {
    if (total() == 0) return std::nullopt;
    if (votes_v2() == 0) return Side::kV1;
    if (votes_v1() == 0) return Side::kV2;
    return std::nullopt;
  }
  friend bool operator==(const SideEdgeCounts&, const SideEdgeCounts&) = default;
};

// Three-way labelling of the maintained connected balanced subgraph S(H).
class BalancedState {
 public:
  BalancedState() = default;
  explicit BalancedState(int node_count) : labels_(node_count, Side::kOut) {}
  explicit BalancedState(std::vector<Side> labels);

  int node_count() const { return static_cast<int>(labels_.size()); }
  Side side(NodeId u) const { return labels_[u]; }
  bool inside(NodeId u) const { return labels_[u] != Side::kOut; }
  int balanced_count() const { return count_; }
  // Smallest member id, or -1 when empty.
  NodeId anchor() const;
  NodeSet Members() const;
  const std::vector<Side>& labels() const { return labels_; }

  void Admit(NodeId u, Side s);
  void Evict(NodeId u);

  friend bool operator==(const BalancedState& a, const BalancedState& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<Side> labels_;
  int count_ = 0;
};

SideEdgeCounts CountSideEdges(const SignedGraph& g, const BalancedState& state, NodeId x,
                              const DeletionMask* mask = nullptr);

// Members induce a connected subgraph on which the labels are a valid
// balance partition (positive edges within a side, negative across).
bool IsValidState(const SignedGraph& g, const BalancedState& state,
                  const DeletionMask* mask = nullptr);

// Exact Delta by enumerating node subsets in decreasing size; the
// lexicographically smallest maximum set wins. Throws LimitExceeded.
BalancedState CurrentBalanceExact(const SignedGraph& g, int max_nodes = 16,
                                  const DeletionMask* mask = nullptr);

// Size-only variant of CurrentBalanceExact.
int ExactDelta(const SignedGraph& g, const DeletionMask* mask = nullptr, int max_nodes = 16);

// Admits side-determined contradiction-free Out nodes adjacent to the state,
// starting from `seeds` (in order) and cascading breadth-first to a fixed
// point. Returns the admitted nodes in admission order.
std::vector<NodeId> Cascade(const SignedGraph& g, const DeletionMask* mask,
                            BalancedState& state, std::span<const NodeId> seeds);

// Cascade seeded with every Out node adjacent to the state.
BalancedState ExpandState(const SignedGraph& g, BalancedState state,
                          const DeletionMask* mask = nullptr);

// Spectral stand-in for an exact maximum balanced subgraph search: switch by
// the smallest Laplacian eigenvector, peel the nodes with most negative
// edges until balanced, keep the largest component and expand it.
BalancedState MaxBalancedHeuristic(const SignedGraph& g, const DeletionMask* mask = nullptr);

// Applies one edge deletion to a state: peripheral deletions may admit nodes;
// deletions inside S(H) keep the largest remaining connected piece. The
// mask must not yet have `e` removed; it is removed on return.
std::vector<NodeId> ApplyDeletion(const SignedGraph& g, DeletionMask& mask,
                                  BalancedState& state, EdgeId e);

// "label side" lines with side in {1, 2, 0}.
void WriteState(std::ostream& out, const SignedGraph& g, const BalancedState& state);
BalancedState ReadState(std::istream& in, const SignedGraph& g);

}  // namespace mbed

#endif  // MBED_BALANCE_H_
