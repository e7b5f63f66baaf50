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


#include <limits>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mbed/balance.h"
#include "mbed/fixtures.h"
#include "mbed/spectral.h"
#include "oracle.h"

namespace mbed {
namespace {

SignedGraph Random(std::mt19937_64& rng, int n, int percent) {
  std::vector<SignedEdge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng() % 100) < percent)
        edges.push_back({u, v, rng() % 2 ? Sign::kPositive : Sign::kNegative});
  return SignedGraph(n, edges);
}

TEST(Laplacian, DenseMatchesOracle) {
  std::mt19937_64 rng(31);
  const SignedGraph g = Random(rng, 7, 50);
  const auto l = oracle::Laplacian(g, {0});
  const Eigen::MatrixXd d = LaplacianView(g, EdgeSet{0}).Dense();
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) EXPECT_EQ(d(i, j), l[i][j]);
}

TEST(Laplacian, QuadraticFormAgreesWithMatrix) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedGraph g = Random(rng, 9, 40);
    const LaplacianView view(g);
    Eigen::VectorXd x = Eigen::VectorXd::Random(9);
    EXPECT_NEAR(view.QuadraticForm(std::span<const double>(x.data(), 9)),
                x.dot(view.Dense() * x), 1e-10);
    Eigen::MatrixXd y;
    view.Apply(x, y);
    EXPECT_NEAR((y - view.Dense() * x).norm(), 0.0, 1e-12);
  }
}

TEST(Laplacian, QuadraticFormHandExample) {
  const Fixture f = NegativeTriangle();
  const std::vector<double> x = {1.0, 2.0, 3.0};
  // Edges ab, bc positive and ca negative.
  double expected = 0;
  for (const auto& e : f.graph.edges()) {
    const double d = x[e.u] - ToInt(e.sign) * x[e.v];
    expected += d * d;
  }
  EXPECT_DOUBLE_EQ(QuadraticForm(f.graph, {}, x), expected);
  EXPECT_THROW(QuadraticForm(f.graph, {}, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(SmallestEigenpair, NegativeTriangleIsOne) {
  const SignedGraph g = NegativeTriangle().graph;
  EXPECT_NEAR(oracle::Lambda1(g), 1.0, 1e-12);
  const EigenPair p = SmallestEigenpair(LaplacianView(g));
  EXPECT_NEAR(p.lambda1, 1.0, 1e-12);
  EXPECT_NEAR(p.v.norm(), 1.0, 1e-12);
}

TEST(SmallestEigenpair, SingleNodeAndEmpty) {
  const EigenPair one = SmallestEigenpair(LaplacianView(SignedGraph(1, {})));
  EXPECT_EQ(one.lambda1, 0.0);
  EXPECT_EQ(one.v.size(), 1);
}

TEST(SmallestEigenpair, ZeroIffBalanced) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    SignedGraph g = Random(rng, 8, 40);
    g = InducedSubgraph(g, LargestConnectedComponent(g)).graph;
    const double lambda = SmallestEigenpair(LaplacianView(g)).lambda1;
    EXPECT_NEAR(lambda, oracle::Lambda1(g), 1e-9);
    EXPECT_EQ(lambda < 1e-9, CheckBalance(g).balanced());
  }
}

TEST(Spectrum, AscendingAndMatchesOracle) {
  std::mt19937_64 rng(34);
  const SignedGraph g = Random(rng, 8, 50);
  const Eigen::VectorXd s = LaplacianSpectrum(LaplacianView(g));
  const auto expected = oracle::Eigenvalues(oracle::Laplacian(g));
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(s(i), expected[i], 1e-9);
}

TEST(Scores, EdgeScoreAndBounds) {
  Eigen::VectorXd v(2);
  v << 0.6, 0.8;
  EXPECT_NEAR(EdgeScore(v, {0, 1, Sign::kPositive}), 0.04, 1e-15);
  EXPECT_NEAR(EdgeScore(v, {0, 1, Sign::kNegative}), 1.96, 1e-15);
  EigenPair eig;
  eig.lambda1 = 1.5;
  eig.v = v;
  EXPECT_NEAR(PerturbationPredict(eig, {0, 1, Sign::kNegative}), -0.46, 1e-15);
  const SignedGraph g(2, {{0, 1, Sign::kNegative}});
  EXPECT_NEAR(UpperBoundG(eig, {0}, g), -0.46, 1e-15);
  EXPECT_NEAR(UpperBoundG(eig, {}, g), 1.5, 1e-15);
  EXPECT_NEAR(BalanceUpperBound(g, eig), 0.5, 1e-15);
  EXPECT_EQ(ScoreKey(0.5), 500000000000LL);
  EXPECT_EQ(ScoreKey(0.5 + 1e-14), ScoreKey(0.5));
}

TEST(Scores, UpperBoundHoldsAfterDeletion) {
  // Rayleigh quotient at the old eigenvector bounds the new lambda1.
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedGraph g = Random(rng, 8, 50);
    if (g.edge_count() < 3) continue;
    const EigenPair eig = SmallestEigenpair(LaplacianView(g));
    const EdgeSet x = {0, static_cast<EdgeId>(g.edge_count() - 1)};
    EXPECT_LE(oracle::Lambda1(g, {x.begin(), x.end()}), UpperBoundG(eig, x, g) + 1e-9);
    EXPECT_GE(BalanceUpperBound(g, eig), oracle::Delta(g) - 1e-9);
  }
}

TEST(SpecTop, PicksLargestScores) {
  std::mt19937_64 rng(36);
  for (int trial = 0; trial < 30; ++trial) {
    const SignedGraph g = Random(rng, 9, 45);
    if (g.edge_count() < 4) continue;
    EdgeSet all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
    const EdgeSet top = SpecTop(g, all, 3);
    ASSERT_EQ(top.size(), 3u);
    const EigenPair eig = SmallestEigenpair(LaplacianView(g));
    long long min_in = std::numeric_limits<long long>::max();
    for (EdgeId e : top) min_in = std::min(min_in, ScoreKey(EdgeScore(eig.v, g.edge(e))));
    for (EdgeId e : all) {
      if (std::binary_search(top.begin(), top.end(), e)) continue;
      EXPECT_LE(ScoreKey(EdgeScore(eig.v, g.edge(e))), min_in);
    }
  }
}

TEST(SpecTop, NegativeTriangleRemovesOneEdgeOfUnitScore) {
  const SignedGraph g = NegativeTriangle().graph;
  const EdgeSet top = SpecTop(g, {0, 1, 2}, 1);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_TRUE(CheckBalance(DeleteEdges(g, top)).balanced());
}

TEST(SpecTop, BudgetChecks) {
  const SignedGraph g = NegativeTriangle().graph;
  EXPECT_TRUE(SpecTop(g, {0, 1}, 0).empty());
  EXPECT_THROW(SpecTop(g, {0, 1}, 3), std::invalid_argument);
  EXPECT_THROW(SpecTop(g, {7}, 1), GraphError);
  DeletionMask mask(3);
  mask.Remove(0);
  EXPECT_THROW(SpecTop(g, {0, 1}, 2, {}, &mask), std::invalid_argument);
  EXPECT_EQ(SpecTop(g, {0, 1}, 1, {}, &mask), (EdgeSet{1}));
}

TEST(Isa, LambdaTrajectoryAndBalance) {
  const SignedGraph g = NegativeTriangle().graph;
  const SolutionReport r = Isa(g, {0, 1, 2}, 1);
  EXPECT_EQ(r.algorithm, "isa");
  ASSERT_EQ(r.deleted.size(), 1u);
  ASSERT_EQ(r.lambda_trajectory.size(), 2u);
  EXPECT_NEAR(r.lambda_trajectory[0], 1.0, 1e-12);
  EXPECT_NEAR(r.lambda_trajectory[1], 0.0, 1e-12);
  EXPECT_FALSE(r.stopped_early);
}

TEST(Isa, FirstStepMatchesSpecTop) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    const SignedGraph g = Random(rng, 9, 45);
    if (g.edge_count() < 3) continue;
    EdgeSet all(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) all[e] = e;
    const SolutionReport r = Isa(g, all, 3);
    ASSERT_EQ(r.deleted.size(), 3u);
    EXPECT_EQ(EdgeSet{r.deleted[0]}, SpecTop(g, all, 1));
    EXPECT_EQ(std::set<EdgeId>(r.deleted.begin(), r.deleted.end()).size(), 3u);
    for (std::size_t i = 0; i < r.lambda_trajectory.size(); ++i) {
      const std::vector<int> removed(r.deleted.begin(), r.deleted.begin() + i);
      EXPECT_NEAR(r.lambda_trajectory[i], oracle::Lambda1(g, removed), 1e-9);
    }
  }
}

}  // namespace
}  // namespace mbed
