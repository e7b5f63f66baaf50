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


#include <random>

#include <gtest/gtest.h>

#include "mbed/cep.h"
#include "mbed/fixtures.h"
#include "oracle.h"

namespace mbed {
namespace {

std::vector<int> SideLabels(const BalancedState& s) {
  std::vector<int> out;
  for (Side x : s.labels()) out.push_back(static_cast<int>(x));
  return out;
}

// Random graph with a random valid state grown from node 0.
std::pair<SignedGraph, BalancedState> RandomInstance(std::mt19937_64& rng, int n, int percent) {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent)
        edges.push_back({u, v, rng() % 2 ? Sign::kPositive : Sign::kNegative});
  SignedGraph g(n, edges);
  return {g, MaxBalancedHeuristic(g)};
}

TEST(CepIndex, ContradictionFixture) {
  const Fixture f = ContradictionFixture();
  const CepIndex index = BuildCepIndex(f.graph, f.state);
  ASSERT_EQ(index.entries().size(), 1u);
  const auto x = index.find(f.node("x"));
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(x->v1_pos, 1);
  EXPECT_EQ(x->v1_neg, 1);
  EXPECT_EQ(x->votes_v1(), 1);
  EXPECT_EQ(x->votes_v2(), 1);
  EXPECT_EQ(x->cep_count(), 1);
  EXPECT_FALSE(x->forced_side().has_value());
  EXPECT_FALSE(index.find(f.node("u1")).has_value());
}

TEST(CepIndex, NonSubmodularFixture) {
  const Fixture f = NonSubmodularFixture();
  const auto v = BuildCepIndex(f.graph, f.state).find(f.node("v"));
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->votes_v1(), 2);
  EXPECT_EQ(v->votes_v2(), 1);
  EXPECT_EQ(v->cep_count(), 2);
}

TEST(CepIndex, CountMatchesPairEnumeration) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const auto [g, s] = RandomInstance(rng, 10, 40);
    const CepIndex index = BuildCepIndex(g, s);
    const auto labels = SideLabels(s);
    for (NodeId x = 0; x < g.node_count(); ++x) {
      if (s.inside(x)) continue;
      const auto c = index.find(x);
      EXPECT_EQ(c ? c->cep_count() : 0, oracle::CepPairs(g, labels, x));
    }
  }
}

TEST(Peripheral, ExactlyOneEndpointInside) {
  const Fixture f = NonSubmodularFixture();
  EXPECT_EQ(PeripheralEdges(f.graph, f.state),
            MakeEdgeSet({f.edge("e1"), f.edge("e2"), f.edge("e3")}));
  DeletionMask mask(f.graph.edge_count());
  mask.Remove(f.edge("e2"));
  EXPECT_EQ(PeripheralEdges(f.graph, f.state, &mask), MakeEdgeSet({f.edge("e1"), f.edge("e3")}));
  EXPECT_EQ(ExteriorEndpoint(f.graph, f.state, f.edge("e1")), f.node("v"));
  EXPECT_THROW(ExteriorEndpoint(f.graph, f.state, f.edge("e4")), NotPeripheral);
}

TEST(ContradictoryPair, Examples) {
  const Fixture f = NonSubmodularFixture();
  for (const char* e : {"e1", "e2", "e3"}) EXPECT_TRUE(InContradictoryPair(f.graph, f.state, f.edge(e)));
  EXPECT_FALSE(InContradictoryPair(f.graph, f.state, f.edge("e4")));
  DeletionMask mask(f.graph.edge_count());
  mask.Remove(f.edge("e3"));
  EXPECT_FALSE(InContradictoryPair(f.graph, f.state, f.edge("e1"), &mask));
  EXPECT_FALSE(InContradictoryPair(f.graph, f.state, f.edge("e3"), &mask));
}

TEST(CountsAfterDeletion, DropsOneEdge) {
  const Fixture f = NonSubmodularFixture();
  const SideEdgeCounts c = CountsAfterDeletion(f.graph, f.state, f.edge("e3"));
  EXPECT_EQ(c.votes_v1(), 2);
  EXPECT_EQ(c.votes_v2(), 0);
  EXPECT_EQ(c.forced_side(), Side::kV1);
}

TEST(MarginalGain, Examples) {
  const Fixture c = ContradictionFixture();
  EXPECT_EQ(MarginalGain(c.graph, c.state, c.edge("xu1")), 1);
  EXPECT_EQ(MarginalGain(c.graph, c.state, c.edge("xu2")), 1);
  const Fixture f = NonSubmodularFixture();
  EXPECT_EQ(MarginalGain(f.graph, f.state, f.edge("e1")), 0);
  EXPECT_EQ(MarginalGain(f.graph, f.state, f.edge("e2")), 0);
  EXPECT_EQ(MarginalGain(f.graph, f.state, f.edge("e3")), 1);
  EXPECT_THROW(MarginalGain(f.graph, f.state, f.edge("e4")), NotPeripheral);
}

TEST(MarginalGain, CascadeCountsChain) {
  // Node 2 is blocked by a contradiction; freeing it also frees its tail 3-4.
  const SignedGraph g(5, {{0, 1, Sign::kPositive},
                          {0, 2, Sign::kPositive},
                          {1, 2, Sign::kNegative},
                          {2, 3, Sign::kPositive},
                          {3, 4, Sign::kPositive}});
  BalancedState s(5);
  s.Admit(0, Side::kV1);
  s.Admit(1, Side::kV1);
  ASSERT_TRUE(IsValidState(g, s));
  EXPECT_EQ(MarginalGain(g, s, *g.FindEdge(1, 2)), 3);
  EXPECT_EQ(MarginalGain(g, s, *g.FindEdge(0, 2)), 3);
}

TEST(SimulateGain, RestoresStateAndMask) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    auto [g, s] = RandomInstance(rng, 10, 35);
    DeletionMask mask(g.edge_count());
    const BalancedState before = s;
    for (EdgeId e : PeripheralEdges(g, s)) {
      const int gain = SimulateGain(g, mask, s, e);
      EXPECT_EQ(s, before);
      EXPECT_TRUE(mask.Removed().empty());
      // The gain is what the committed deletion admits.
      DeletionMask m2(g.edge_count());
      BalancedState s2 = before;
      const auto admitted = ApplyDeletion(g, m2, s2, e);
      EXPECT_EQ(gain, static_cast<int>(admitted.size()));
      EXPECT_EQ(s2.balanced_count(), before.balanced_count() + gain);
    }
  }
}

TEST(SimulateGain, DeletedEdgeRejected) {
  const Fixture f = NonSubmodularFixture();
  DeletionMask mask(f.graph.edge_count());
  mask.Remove(f.edge("e1"));
  BalancedState s = f.state;
  EXPECT_THROW(SimulateGain(f.graph, mask, s, f.edge("e1")), NotPeripheral);
}

}  // namespace
}  // namespace mbed
