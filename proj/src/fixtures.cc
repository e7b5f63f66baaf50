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


#include "mbed/fixtures.h"

#include <stdexcept>
#include <utility>
#include <vector>

namespace mbed {

namespace {

struct Builder {
  int n = 0;
  std::vector<SignedEdge> edges;
  std::vector<std::pair<std::string, std::pair<NodeId, NodeId>>> named;
  std::map<std::string, NodeId> nodes;

  NodeId Node(const std::string& name) {
    nodes[name] = n;
    return n++;
  }
  void Edge(NodeId u, NodeId v, int sign, const std::string& name = "") {
    edges.push_back({u, v, sign > 0 ? Sign::kPositive : Sign::kNegative});
    if (!name.empty()) named.push_back({name, {u, v}});
  }
  Fixture Build(const std::vector<std::pair<NodeId, Side>>& members) {
    Fixture f;
    f.graph = SignedGraph(n, edges);
    f.state = BalancedState(n);
    for (const auto& [u, s] : members) f.state.Admit(u, s);
    for (const auto& [name, uv] : named) f.edges[name] = *f.graph.FindEdge(uv.first, uv.second);
    f.nodes = nodes;
    return f;
  }
};

}  // namespace

Fixture BalancedPath() {
  Builder b;
  const NodeId a = b.Node("a"), bb = b.Node("b"), c = b.Node("c"), d = b.Node("d");
  b.Edge(a, bb, +1, "ab");
  b.Edge(bb, c, -1, "bc");
  b.Edge(c, d, +1, "cd");
  return b.Build({{a, Side::kV1}, {bb, Side::kV1}, {c, Side::kV2}, {d, Side::kV2}});
}

Fixture NegativeTriangle() {
  Builder b;
  const NodeId a = b.Node("a"), bb = b.Node("b"), c = b.Node("c");
  b.Edge(a, bb, +1, "ab");
  b.Edge(bb, c, +1, "bc");
  b.Edge(a, c, -1, "ca");
  return b.Build({{a, Side::kV1}, {bb, Side::kV1}});
}

Fixture ContradictionFixture() {
  Builder b;
  const NodeId u1 = b.Node("u1"), u2 = b.Node("u2"), x = b.Node("x");
  b.Edge(u1, u2, +1, "u1u2");
  b.Edge(x, u1, +1, "xu1");
  b.Edge(x, u2, -1, "xu2");
  return b.Build({{u1, Side::kV1}, {u2, Side::kV1}});
}

Fixture NonSubmodularFixture() {
  Builder b;
  const NodeId u1 = b.Node("u1"), u2 = b.Node("u2"), u3 = b.Node("u3"), w = b.Node("w"),
               v = b.Node("v");
  b.Edge(u1, u2, +1, "e4");
  b.Edge(u1, u3, +1);
  b.Edge(u2, u3, +1);
  b.Edge(u3, w, -1);
  b.Edge(u1, v, +1, "e1");
  b.Edge(u2, v, +1, "e2");
  b.Edge(w, v, +1, "e3");
  return b.Build({{u1, Side::kV1}, {u2, Side::kV1}, {u3, Side::kV1}, {w, Side::kV2}});
}

Fixture TightnessFixture(int delta, int budget) {
  if (delta < 4 || delta % 2 != 0) throw std::invalid_argument("delta must be even and >= 4");
  if (budget < 3 || budget % 2 == 0) throw std::invalid_argument("b must be odd and >= 3");
  Builder b;
  const int half = delta / 2;
  std::vector<std::pair<NodeId, Side>> members;
  for (int i = 0; i < delta; ++i) {
    const NodeId u = b.Node("s" + std::to_string(i));
    members.push_back({u, i < half ? Side::kV1 : Side::kV2});
    if (i > 0) b.Edge(u - 1, u, i == half ? -1 : +1);
  }
  int r = 0;
  const int chain = (delta - 2) / 2;
  for (int k = 0; k < (budget - 1) / 2; ++k) {
    const NodeId x = b.Node("x" + std::to_string(k));
    b.Edge(0, x, +1, "r" + std::to_string(r++));
    b.Edge(1, x, +1, "r" + std::to_string(r++));
    b.Edge(half, x, +1);
    NodeId prev = x;
    for (int c = 0; c < chain; ++c) {
      const NodeId t = b.Node("x" + std::to_string(k) + "c" + std::to_string(c));
      b.Edge(prev, t, +1);
      prev = t;
    }
  }
  const NodeId y = b.Node("y");
  b.Edge(0, y, +1, "r" + std::to_string(r++));
  b.Edge(half, y, +1);
  return b.Build(members);
}

}  // namespace mbed
