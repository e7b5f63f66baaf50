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


// Small hand-built graphs with known balance behaviour.

#ifndef MBED_FIXTURES_H_
#define MBED_FIXTURES_H_

#include <map>
#include <string>

#include "mbed/balance.h"
#include "mbed/graph.h"

namespace mbed {

struct Fixture {
  SignedGraph graph;
  BalancedState state;  // S(H) the fixture is meant to start from
  std::map<std::string, EdgeId> edges;
  std::map<std::string, NodeId> nodes;

  EdgeId edge(const std::string& name) const { return edges.at(name); }
  NodeId node(const std::string& name) const { return nodes.at(name); }
};

// Path a-b-c-d, only (b,c) negative. Balanced, Delta = 4.
Fixture BalancedPath();

// Triangle with one negative edge (c,a).
Fixture NegativeTriangle();

// u1-u2 positive in V1; x hangs off both with (x,u1,+) and (x,u2,-).
Fixture ContradictionFixture();

// S(H) = u1,u2,u3 in V1 and w in V2; v is tied to V1 by e1, e2 and to V2
// by e3, and e4 = (u1,u2) is a non-bridge edge inside V1.
Fixture NonSubmodularFixture();

// A path of `delta` nodes split evenly into V1 | V2 with (b-1)/2 blocked
// nodes x, each tied to V1 by two R edges and to V2 by one kept edge and
// trailing a positive chain of (delta-2)/2 nodes, plus one node y whose
// single R edge (y,first V1 node) frees it. Requires delta even >= 4 and
// b odd >= 3. Edges of R are named "r0", "r1", ...
Fixture TightnessFixture(int delta, int b);

}  // namespace mbed

#endif  // MBED_FIXTURES_H_
