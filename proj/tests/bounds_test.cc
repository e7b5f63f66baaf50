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

#include "mbed/bounds.h"
#include "mbed/fixtures.h"
#include "mbed/optimize.h"
#include "oracle.h"

namespace mbed {
namespace {

TEST(GammaBounds, Examples) {
  const BoundReport one = GammaBounds(1, 50);
  EXPECT_DOUBLE_EQ(one.gamma_II, 1.0);
  EXPECT_NEAR(one.approx_II, 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_FALSE(one.gamma_I.has_value());
  EXPECT_FALSE(one.gamma_III.has_value());

  const BoundReport r = GammaBounds(3, 10, 4, 3);
  EXPECT_NEAR(r.gamma_II, 1.0 / 6.0, 1e-15);
  ASSERT_TRUE(r.gamma_I.has_value());
  EXPECT_NEAR(*r.gamma_I, 1.0 / 3.0, 1e-15);
  ASSERT_TRUE(r.gamma_III.has_value());
  EXPECT_NEAR(*r.gamma_III, 12.0 / 32.0, 1e-15);
  EXPECT_NEAR(GammaBounds(2, 4).gamma_II, 0.5, 1e-15);
  EXPECT_NEAR(*r.approx_III, 1.0 - std::exp(-0.375), 1e-15);
}

TEST(GammaBounds, RejectsBadInput) {
  EXPECT_THROW(GammaBounds(0, 3), std::invalid_argument);
  EXPECT_THROW(GammaBounds(2, -1), std::invalid_argument);
  EXPECT_THROW(GammaBounds(2, 3, -1), std::invalid_argument);
  EXPECT_THROW(GammaBounds(2, 3, 4, 0), std::invalid_argument);
}

TEST(Psi, MatchesOracle) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (rng() % 100 < 45) edges.push_back({u, v, rng() % 2 ? Sign::kPositive : Sign::kNegative});
    const SignedGraph g(7, edges);
    if (g.edge_count() < 4) continue;
    const EdgeSet alg = {0, 1};
    const EdgeSet opt = {1, 2, 3};
    long long expected = 0;
    const int base = oracle::Delta(g, {0, 1});
    for (int e : {2, 3}) expected += oracle::Delta(g, {0, 1, e}) - base;
    EXPECT_EQ(ComputePsi(g, alg, opt), expected);
  }
}

TEST(PseudoSubmodularity, SingletonIsEquality) {
  const Fixture f = NonSubmodularFixture();
  for (GainModel model : {GainModel::kExact, GainModel::kMaintainedState}) {
    const auto p = PseudoSubmodularityCheck(f.graph, f.state, {}, {f.edge("e3")}, model);
    EXPECT_EQ(p.lhs, p.rhs);
    EXPECT_EQ(p.lhs, 1);
    EXPECT_DOUBLE_EQ(p.gamma_bound, 1.0);
    EXPECT_TRUE(p.holds);
  }
}

TEST(PseudoSubmodularity, NonPositiveRhsHolds) {
  // One edge off a positive triangle changes nothing; two isolate a node.
  const SignedGraph g(3, {{0, 1, Sign::kPositive}, {0, 2, Sign::kPositive}, {1, 2, Sign::kPositive}});
  const auto p = PseudoSubmodularityCheck(g, MaxBalancedHeuristic(g), {}, {0, 1});
  EXPECT_EQ(p.delta_q, 3);
  EXPECT_EQ(p.lhs, 0);
  EXPECT_EQ(p.rhs, -1);
  EXPECT_TRUE(p.holds);
}

TEST(PseudoSubmodularity, ZeroSingletonGainsFailTheBound) {
  // Neither V1 edge frees v alone, but both together do.
  const Fixture f = NonSubmodularFixture();
  const auto p = PseudoSubmodularityCheck(f.graph, f.state, {}, {f.edge("e1"), f.edge("e2")});
  EXPECT_EQ(p.lhs, 0);
  EXPECT_EQ(p.rhs, 1);
  EXPECT_EQ(p.delta_q, 4);
  EXPECT_NEAR(p.gamma_bound, 0.5, 1e-15);
  EXPECT_FALSE(p.holds);
}

TEST(PseudoSubmodularity, MatchesOracleGains) {
  const Fixture f = NonSubmodularFixture();
  const EdgeSet q = {f.edge("e4")};
  const EdgeSet r = MakeEdgeSet({f.edge("e1"), f.edge("e3")});
  const auto p = PseudoSubmodularityCheck(f.graph, f.state, q, r);
  const int base = oracle::Delta(f.graph, {q[0]});
  EXPECT_EQ(p.delta_q, base);
  EXPECT_EQ(p.lhs, oracle::Delta(f.graph, {q[0], r[0]}) + oracle::Delta(f.graph, {q[0], r[1]}) -
                       2 * base);
  EXPECT_EQ(p.rhs, oracle::Delta(f.graph, {q[0], r[0], r[1]}) - base);
}

TEST(PseudoSubmodularity, RejectsBadSets) {
  const Fixture f = NonSubmodularFixture();
  EXPECT_THROW(PseudoSubmodularityCheck(f.graph, f.state, {0}, {}), std::invalid_argument);
  EXPECT_THROW(PseudoSubmodularityCheck(f.graph, f.state, {0}, {0, 1}), std::invalid_argument);
}

class Tightness : public ::testing::TestWithParam<std::pair<int, int>> {};

TEST_P(Tightness, EqualityInMaintainedStateModel) {
  const auto [delta, b] = GetParam();
  const Fixture f = TightnessFixture(delta, b);
  EdgeSet r;
  for (int i = 0; i < b; ++i) r.push_back(f.edge("r" + std::to_string(i)));
  const auto p = PseudoSubmodularityCheck(f.graph, f.state, {}, MakeEdgeSet(r),
                                          GainModel::kMaintainedState, 64);
  EXPECT_EQ(p.delta_q, delta);
  EXPECT_EQ(p.lhs, 1);
  EXPECT_EQ(p.rhs, (b - 1) / 2 * delta / 2 + 1);
  EXPECT_NEAR(p.gamma_bound * p.rhs, 1.0, 1e-12);
  EXPECT_TRUE(p.holds);
}

INSTANTIATE_TEST_SUITE_P(Cases, Tightness,
                         ::testing::Values(std::pair{4, 3}, std::pair{6, 3}, std::pair{6, 5}));

TEST(TightnessFixture, RejectsBadParameters) {
  EXPECT_THROW(TightnessFixture(5, 3), std::invalid_argument);
  EXPECT_THROW(TightnessFixture(4, 4), std::invalid_argument);
  EXPECT_THROW(TightnessFixture(2, 3), std::invalid_argument);
}

TEST(InductionBound, AlphaCountsNodeFreedByPair) {
  const Fixture f = NonSubmodularFixture();
  const auto r = CheckInductionBound(f.graph, f.state, {f.edge("e1"), f.edge("e2")});
  EXPECT_EQ(r.delta, 4);
  EXPECT_EQ(r.f_b, 1);
  EXPECT_EQ(r.singleton_sum, 0);
  EXPECT_EQ(r.c_star, 0);
  EXPECT_EQ(r.alpha, 1);
  EXPECT_TRUE(r.bound_holds);
  EXPECT_TRUE(r.c_star_holds);
  EXPECT_FALSE(r.alpha_holds);
  EXPECT_EQ(r.f_b_state, 1);
  EXPECT_TRUE(r.state_bound_holds);
}

TEST(InductionBound, CascadeSize) {
  // Freeing node 2 drags 3 and 4 along.
  const SignedGraph g(5, {{0, 1, Sign::kPositive},
                          {0, 2, Sign::kPositive},
                          {1, 2, Sign::kNegative},
                          {2, 3, Sign::kPositive},
                          {3, 4, Sign::kPositive}});
  BalancedState s(5);
  s.Admit(0, Side::kV1);
  s.Admit(1, Side::kV1);
  const auto r = CheckInductionBound(g, s, {*g.FindEdge(1, 2)});
  EXPECT_EQ(r.c_star, 2);
  EXPECT_EQ(r.alpha, 0);
  // The exact optimum already drops one triangle node.
  EXPECT_EQ(r.delta, 4);
  EXPECT_EQ(r.f_b, 1);
  EXPECT_EQ(r.f_b_state, 3);
}

TEST(InductionBound, RejectsBadSequences) {
  const Fixture f = NonSubmodularFixture();
  EXPECT_THROW(CheckInductionBound(f.graph, f.state, {}), std::invalid_argument);
  EXPECT_THROW(CheckInductionBound(f.graph, f.state, std::vector<EdgeId>(21, 0)), LimitExceeded);
}

}  // namespace
}  // namespace mbed
