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

// Signed graph data model, edge-list ingestion and structural utilities.

#ifndef MBED_GRAPH_H_
#define MBED_GRAPH_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbed {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;

enum class Sign : std::int8_t { kNegative = -1, kPositive = 1 };

inline int ToInt(Sign s) { return static_cast<int>(s); }
inline Sign Flip(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
inline Sign Multiply(Sign a, Sign b) { return a == b ? Sign::kPositive : Sign::kNegative; }

// Ascending, duplicate-free id lists.
using NodeSet = std::vector<NodeId>;
using EdgeSet = std::vector<EdgeId>;

// Sorts and deduplicates in place.
NodeSet MakeNodeSet(std::vector<NodeId> ids);
EdgeSet MakeEdgeSet(std::vector<EdgeId> ids);

struct SignedEdge {
  NodeId u = 0;
  NodeId v = 0;
  Sign sign = Sign::kPositive;

  NodeId Other(NodeId x) const { return x == u ? v : u; }
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

struct Adjacent {
  NodeId neighbor;
  Sign sign;
  EdgeId edge;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph with +/-1 edge signs.
//
// Edges are stored with u < v, sorted by (u, v); an edge's id is its rank in
// that order. Adjacency lists are sorted by neighbor id.
class SignedGraph {
 public:
  SignedGraph() = default;

  // Throws GraphError on self-loops, parallel edges or out-of-range ids.
  // `labels`, when non-empty, must have exactly `node_count` entries.
  SignedGraph(int node_count, std::vector<SignedEdge> edges,
              std::vector<std::string> labels = {});

  int node_count() const { return node_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const SignedEdge& edge(EdgeId e) const { return edges_.at(e); }
  std::span<const SignedEdge> edges() const { return edges_; }

  std::span<const Adjacent> neighbors(NodeId u) const {
    return {adjacency_.data() + offsets_[u],
            adjacency_.data() + offsets_[u + 1]};
  }
  int degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  std::optional<EdgeId> FindEdge(NodeId u, NodeId v) const;

  // Original label if one was recorded, otherwise the dense id.
  std::string label(NodeId u) const;
  const std::vector<std::string>& labels() const { return labels_; }

  int negative_edge_count() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  int node_count_ = 0;
  std::vector<SignedEdge> edges_;
  std::vector<std::string> labels_;
  std::vector<int> offsets_{0};
  std::vector<Adjacent> adjacency_;
};

// Overlay of deleted edges on top of an immutable graph.
class DeletionMask {
 public:
  DeletionMask() = default;
  explicit DeletionMask(int edge_count) : alive_(edge_count, 1) {}
  DeletionMask(int edge_count, std::span<const EdgeId> removed);

  bool alive(EdgeId e) const { return alive_[e] != 0; }
  void Remove(EdgeId e) { alive_[e] = 0; }
  void Restore(EdgeId e) { alive_[e] = 1; }
  int size() const { return static_cast<int>(alive_.size()); }
  EdgeSet Removed() const;

 private:
  std::vector<std::uint8_t> alive_;
};

// ---------------------------------------------------------------------------
// Edge-list ingestion.

struct LoadOptions {
  // Use the sign of an arbitrary numeric weight; otherwise it must be +/-1.
  bool sign_from_weight = false;
};

struct LoadReport {
  int data_lines = 0;
  int comment_lines = 0;
  int dropped_self_loops = 0;
  int dropped_duplicates = 0;
  // Subset of dropped_duplicates whose sign disagreed with the kept edge.
  int conflicting_duplicates = 0;
};

struct LoadResult {
  SignedGraph graph;
  LoadReport report;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

// Parses whitespace-separated "u v s" lines. Lines starting with '%' or '#'
// are comments. Direction is ignored, self-loops and repeated pairs dropped
// (the first sign seen wins). Node labels are densified in ascending numeric
// order when every label is an integer, lexicographic order otherwise.
LoadResult LoadEdgeList(std::istream& in, const LoadOptions& options = {});
LoadResult LoadEdgeListFile(const std::string& path,
                            const LoadOptions& options = {});

struct WriteOptions {
  bool use_labels = false;
  // Emit "x x +1" for isolated nodes so a reload keeps them.
  bool keep_isolated = true;
};

// One "u v +1|-1" line per edge in ascending (u, v).
void WriteEdgeList(std::ostream& out, const SignedGraph& g,
                   const WriteOptions& options = {});

// Graphviz output with negative edges dashed. Throws GraphError above 200 nodes.
void ExportDot(std::ostream& out, const SignedGraph& g);

// ---------------------------------------------------------------------------
// Structure.

// Per-node component index (-1 for nodes excluded by `members`), numbered in
// order of smallest contained node.
struct Components {
  std::vector<int> id;
  std::vector<int> size;
  int count() const { return static_cast<int>(size.size()); }
};

Components ConnectedComponents(const SignedGraph& g,
                               const DeletionMask* mask = nullptr);

// Components of the subgraph induced by nodes with member[u] != 0.
Components ConnectedComponents(const SignedGraph& g,
                               std::span<const std::uint8_t> member,
                               const DeletionMask* mask = nullptr);

int ConnectedComponentCount(const SignedGraph& g);

// Maximum-cardinality component; ties go to the one holding the smallest id.
NodeSet LargestConnectedComponent(const SignedGraph& g);

// Maximal node set whose induced subgraph has minimum degree >= k.
NodeSet KCore(const SignedGraph& g, int k);

struct Subgraph {
  SignedGraph graph;
  std::vector<NodeId> to_parent;    // new id -> parent id
  std::vector<NodeId> from_parent;  // parent id -> new id or -1
  std::vector<EdgeId> edge_to_parent;
};

Subgraph InducedSubgraph(const SignedGraph& g, const NodeSet& nodes);

// Same node set, edges in `removed` dropped. Throws GraphError on unknown ids.
SignedGraph DeleteEdges(const SignedGraph& g, const EdgeSet& removed);

}  // namespace mbed

#endif  // MBED_GRAPH_H_
