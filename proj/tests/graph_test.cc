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
#include <sstream>

#include <gtest/gtest.h>

#include "mbed/graph.h"

namespace mbed {
namespace {

LoadResult Parse(const std::string& text, bool weights = false) {
  std::istringstream in(text);
  LoadOptions options;
  options.sign_from_weight = weights;
  return LoadEdgeList(in, options);
}

SignedGraph Make(int n, std::vector<std::tuple<int, int, int>> edges) {
  std::vector<SignedEdge> es;
  for (auto [u, v, s] : edges) es.push_back({u, v, s > 0 ? Sign::kPositive : Sign::kNegative});
  return SignedGraph(n, es);
}

TEST(LoadEdgeList, BasicSignedLines) {
  const auto r = Parse("1 2 +1\n2 3 -1\n");
  ASSERT_EQ(r.graph.node_count(), 3);
  ASSERT_EQ(r.graph.edge_count(), 2);
  EXPECT_EQ(r.graph.edge(0), (SignedEdge{0, 1, Sign::kPositive}));
  EXPECT_EQ(r.graph.edge(1), (SignedEdge{1, 2, Sign::kNegative}));
}

TEST(LoadEdgeList, WeightsAndDuplicates) {
  const auto r = Parse("% comment\n1 2 4.5\n2 1 -3\n", true);
  EXPECT_EQ(r.graph.node_count(), 2);
  ASSERT_EQ(r.graph.edge_count(), 1);
  EXPECT_EQ(r.graph.edge(0).sign, Sign::kPositive);
  EXPECT_EQ(r.report.dropped_duplicates, 1);
  EXPECT_EQ(r.report.conflicting_duplicates, 1);
  EXPECT_EQ(r.report.comment_lines, 1);
}

TEST(LoadEdgeList, SelfLoopKeepsNode) {
  const auto r = Parse("5 5 1\n");
  EXPECT_EQ(r.graph.node_count(), 1);
  EXPECT_EQ(r.graph.edge_count(), 0);
  EXPECT_EQ(r.report.dropped_self_loops, 1);
}

TEST(LoadEdgeList, HashCommentsAndExtraTokens) {
  const auto r = Parse("# header\n1 2 -1 1234567\n");
  EXPECT_EQ(r.graph.edge_count(), 1);
  EXPECT_EQ(r.graph.edge(0).sign, Sign::kNegative);
}

TEST(LoadEdgeList, Errors) {
  EXPECT_THROW(Parse("1 2\n"), ParseError);
  EXPECT_THROW(Parse("1 2 x\n"), ParseError);
  EXPECT_THROW(Parse("1 2 0\n", true), ParseError);
  EXPECT_THROW(Parse("1 2 2\n"), ParseError);
  try {
    Parse("1 2 1\n3 4\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(LoadEdgeList, EmptyIsLegal) {
  const auto r = Parse("% nothing\n");
  EXPECT_EQ(r.graph.node_count(), 0);
  EXPECT_EQ(r.graph.edge_count(), 0);
}

TEST(LoadEdgeList, NumericLabelsSortNumerically) {
  const auto r = Parse("10 9 1\n9 100 -1\n");
  EXPECT_EQ(r.graph.label(0), "9");
  EXPECT_EQ(r.graph.label(1), "10");
  EXPECT_EQ(r.graph.label(2), "100");
}

TEST(LoadEdgeList, WriteThenReloadIsIdentical) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    std::ostringstream text;
    for (int i = 0; i < 40; ++i) {
      text << rng() % 30 << ' ' << rng() % 30 << ' ' << (rng() % 2 ? "1" : "-1") << '\n';
    }
    const SignedGraph g = Parse(text.str()).graph;
    std::ostringstream written;
    WriteEdgeList(written, g, {.use_labels = true});
    const SignedGraph again = Parse(written.str()).graph;
    EXPECT_EQ(g, again);
    std::ostringstream rewritten;
    WriteEdgeList(rewritten, again, {.use_labels = true});
    EXPECT_EQ(written.str(), rewritten.str());
  }
}

TEST(SignedGraph, RejectsBadInput) {
  EXPECT_THROW(Make(2, {{0, 0, 1}}), GraphError);
  EXPECT_THROW(Make(2, {{0, 1, 1}, {1, 0, -1}}), GraphError);
  EXPECT_THROW(Make(2, {{0, 2, 1}}), GraphError);
}

TEST(SignedGraph, AdjacencyIsSymmetric) {
  const SignedGraph g = Make(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}, {0, 3, -1}});
  for (NodeId u = 0; u < 4; ++u) {
    for (const auto& a : g.neighbors(u)) {
      bool found = false;
      for (const auto& b : g.neighbors(a.neighbor)) {
        found = found || (b.neighbor == u && b.sign == a.sign && b.edge == a.edge);
      }
      EXPECT_TRUE(found);
    }
  }
}

TEST(Components, LargestComponentTieBreak) {
  const SignedGraph g = Make(5, {{2, 3, 1}, {0, 1, 1}});
  EXPECT_EQ(LargestConnectedComponent(g), (NodeSet{0, 1}));
  EXPECT_EQ(LargestConnectedComponent(Make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}})),
            (NodeSet{0, 1, 2}));
  EXPECT_TRUE(LargestConnectedComponent(SignedGraph()).empty());
}

TEST(Components, Counts) {
  const SignedGraph p4 = Make(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}});
  EXPECT_EQ(ConnectedComponentCount(p4), 1);
  EXPECT_EQ(ConnectedComponentCount(DeleteEdges(p4, {1})), 2);
  EXPECT_EQ(ConnectedComponentCount(Make(3, {})), 3);
}

TEST(KCore, Examples) {
  const SignedGraph triangle = Make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  EXPECT_EQ(KCore(triangle, 2), (NodeSet{0, 1, 2}));
  EXPECT_TRUE(KCore(Make(4, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}}), 2).empty());
  EXPECT_EQ(KCore(Make(4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}}), 2), (NodeSet{0, 1, 2}));
}

TEST(KCore, NestedInK) {
  std::mt19937_64 rng(11);
  std::vector<SignedEdge> edges;
  for (int u = 0; u < 40; ++u)
    for (int v = u + 1; v < 40; ++v)
      if (rng() % 6 == 0) edges.push_back({u, v, Sign::kPositive});
  const SignedGraph g(40, edges);
  for (int k = 0; k < 10; ++k) {
    const NodeSet outer = KCore(g, k), inner = KCore(g, k + 1);
    EXPECT_TRUE(std::includes(outer.begin(), outer.end(), inner.begin(), inner.end()));
  }
}

TEST(InducedSubgraph, Examples) {
  const SignedGraph triangle = Make(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, -1}});
  const Subgraph s = InducedSubgraph(triangle, {0, 2});
  ASSERT_EQ(s.graph.edge_count(), 1);
  EXPECT_EQ(s.graph.edge(0).sign, Sign::kNegative);
  EXPECT_EQ(s.to_parent, (std::vector<NodeId>{0, 2}));
  EXPECT_EQ(InducedSubgraph(triangle, {0, 1, 2}).graph, triangle);
  EXPECT_EQ(InducedSubgraph(triangle, {}).graph.node_count(), 0);
  EXPECT_THROW(InducedSubgraph(triangle, {5}), GraphError);
}

TEST(InducedSubgraph, LargestComponentIsConnected) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<SignedEdge> edges;
    for (int u = 0; u < 25; ++u)
      for (int v = u + 1; v < 25; ++v)
        if (rng() % 20 == 0) edges.push_back({u, v, Sign::kNegative});
    const SignedGraph g(25, edges);
    EXPECT_EQ(ConnectedComponentCount(InducedSubgraph(g, LargestConnectedComponent(g)).graph), 1);
  }
}

TEST(DeleteEdges, Examples) {
  const SignedGraph p4 = Make(4, {{0, 1, 1}, {1, 2, -1}, {2, 3, 1}});
  EXPECT_EQ(DeleteEdges(p4, {}), p4);
  const SignedGraph none = DeleteEdges(p4, {0, 1, 2});
  EXPECT_EQ(none.node_count(), 4);
  EXPECT_EQ(none.edge_count(), 0);
  EXPECT_EQ(DeleteEdges(p4, {1}).edge_count(), 2);
  EXPECT_THROW(DeleteEdges(p4, {7}), GraphError);
}

TEST(ExportDot, StylesNegativeEdges) {
  std::ostringstream out;
  ExportDot(out, Make(2, {{0, 1, -1}}));
  EXPECT_NE(out.str().find("dashed"), std::string::npos);
  EXPECT_THROW(ExportDot(out, Make(201, {})), GraphError);
}

}  // namespace
}  // namespace mbed
