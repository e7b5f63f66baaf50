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

// Contradictory edge pairs, peripheral edges and single-deletion gains.

#ifndef MBED_CEP_H_
#define MBED_CEP_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "mbed/balance.h"
#include "mbed/graph.h"

namespace mbed {

struct CepEntry {
  NodeId node;
  SideEdgeCounts counts;
};

// Edge-class counters for every Out node with at least one edge into S(H).
class CepIndex {
 public:
  CepIndex() = default;
  explicit CepIndex(std::vector<CepEntry> entries) : entries_(std::move(entries)) {}

  const std::vector<CepEntry>& entries() const { return entries_; }
  std::optional<SideEdgeCounts> find(NodeId x) const;

 private:
  std::vector<CepEntry> entries_;  // ascending node id
};

CepIndex BuildCepIndex(const SignedGraph& g, const BalancedState& state,
                       const DeletionMask* mask = nullptr);

// Edges with exactly one endpoint in S(H).
EdgeSet PeripheralEdges(const SignedGraph& g, const BalancedState& state,
                        const DeletionMask* mask = nullptr);

class NotPeripheral : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Endpoint of a peripheral edge that lies outside S(H).
NodeId ExteriorEndpoint(const SignedGraph& g, const BalancedState& state, EdgeId e);

// Counts at the exterior endpoint of e once e is gone.
SideEdgeCounts CountsAfterDeletion(const SignedGraph& g, const BalancedState& state, EdgeId e,
                                   const DeletionMask* mask = nullptr);

// True when e is peripheral and forms a contradictory pair with another
// edge at its exterior endpoint.
bool InContradictoryPair(const SignedGraph& g, const BalancedState& state, EdgeId e,
                         const DeletionMask* mask = nullptr);

// Nodes admitted to S(H) by deleting the peripheral edge e (cascade
// included). `state` and `mask` are left unchanged.
int MarginalGain(const SignedGraph& g, const BalancedState& state, EdgeId e,
                 const DeletionMask* mask = nullptr);

// In-place variant for optimizer loops: mutates and then restores.
int SimulateGain(const SignedGraph& g, DeletionMask& mask, BalancedState& state, EdgeId e);

}  // namespace mbed

#endif  // MBED_CEP_H_
