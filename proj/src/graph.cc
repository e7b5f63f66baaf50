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

#include "mbed/graph.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace mbed {

NodeSet MakeNodeSet(std::vector<NodeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

EdgeSet MakeEdgeSet(std::vector<EdgeId> ids) { return MakeNodeSet(std::move(ids)); }

SignedGraph::SignedGraph(int node_count, std::vector<SignedEdge> edges,
                         std::vector<std::string> labels)
    : node_count_(node_count), edges_(std::move(edges)), labels_(std::move(labels)) {
  if (node_count_ < 0) throw GraphError("negative node count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != node_count_) {
    throw GraphError("label count does not match node count");
  }
  for (auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_) {
      throw GraphError("edge endpoint out of range");
    }
    if (e.u == e.v) throw GraphError("self-loop at node " + std::to_string(e.u));
    if (e.sign != Sign::kPositive && e.sign != Sign::kNegative) {
      throw GraphError("edge sign must be +1 or -1");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const SignedEdge& a, const SignedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw GraphError("parallel edge (" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + ")");
    }
  }

  std::vector<int> degree(node_count_, 0);
  for (const auto& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (int u = 0; u < node_count_; ++u) offsets_[u + 1] = offsets_[u] + degree[u];
  adjacency_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edge_count(); ++id) {
    const auto& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, e.sign, id};
    adjacency_[fill[e.v]++] = {e.u, e.sign, id};
  }
  for (int u = 0; u < node_count_; ++u) {
    std::sort(adjacency_.begin() + offsets_[u], adjacency_.begin() + offsets_[u + 1],
              [](const Adjacent& a, const Adjacent& b) { return a.neighbor < b.neighbor; });
  }
}

std::optional<EdgeId> SignedGraph::FindEdge(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) return std::nullopt;
  auto adj = neighbors(u);
  auto it = std::lower_bound(adj.begin(), adj.end(), v,
                             [](const Adjacent& a, NodeId x) { return a.neighbor < x; });
  if (it == adj.end() || it->neighbor != v) return std::nullopt;
  return it->edge;
}

std::string SignedGraph::label(NodeId u) const {
  if (labels_.empty()) return std::to_string(u);
  return labels_.at(u);
}

int SignedGraph::negative_edge_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const SignedEdge& e) {
    return e.sign == Sign::kNegative;
  }));
}

DeletionMask::DeletionMask(int edge_count, std::span<const EdgeId> removed)
    : alive_(edge_count, 1) {
  for (EdgeId e : removed) {
    if (e < 0 || e >= edge_count) throw GraphError("unknown edge id " + std::to_string(e));
    alive_[e] = 0;
  }
}

EdgeSet DeletionMask::Removed() const {
  EdgeSet out;
  for (EdgeId e = 0; e < size(); ++e) {
    if (!alive_[e]) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::optional<double> ParseNumber(const std::string& token) {
  const char* begin = token.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value)) return std::nullopt;
  return value;
}

std::optional<long long> ParseInteger(const std::string& token) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

struct RawEdge {
  std::string u, v;
  Sign sign;
};

}  // namespace

LoadResult LoadEdgeList(std::istream& in, const LoadOptions& options) {
  LoadReport report;
  std::vector<RawEdge> raw;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '%' || line[first] == '#') {
      ++report.comment_lines;
      continue;
    }
    std::istringstream tokens(line);
    std::string u, v, s;
    if (!(tokens >> u >> v >> s)) {
      throw ParseError(line_number, "expected at least 3 tokens");
    }
    auto weight = ParseNumber(s);
    if (!weight) throw ParseError(line_number, "unparsable sign '" + s + "'");
    if (*weight == 0.0) throw ParseError(line_number, "zero sign");
    if (!options.sign_from_weight && *weight != 1.0 && *weight != -1.0) {
      throw ParseError(line_number, "sign must be +1 or -1, got '" + s + "'");
    }
    ++report.data_lines;
    raw.push_back({u, v, *weight > 0 ? Sign::kPositive : Sign::kNegative});
  }

  std::vector<std::string> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& r : raw) {
    labels.push_back(r.u);
    labels.push_back(r.v);
  }

  bool numeric = std::all_of(labels.begin(), labels.end(),
                             [](const std::string& l) { return ParseInteger(l).has_value(); });
  if (numeric) {
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return *ParseInteger(a) < *ParseInteger(b);
    });
    labels.erase(std::unique(labels.begin(), labels.end(),
                             [](const std::string& a, const std::string& b) {
                               return *ParseInteger(a) == *ParseInteger(b);
                             }),
                 labels.end());
  } else {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  }

  std::unordered_map<std::string, NodeId> index;
  std::map<long long, NodeId> numeric_index;
  for (NodeId i = 0; i < static_cast<NodeId>(labels.size()); ++i) {
    if (numeric) {
      numeric_index[*ParseInteger(labels[i])] = i;
    } else {
      index[labels[i]] = i;
    }
  }
  auto id_of = [&](const std::string& l) {
    return numeric ? numeric_index.at(*ParseInteger(l)) : index.at(l);
  };

  std::map<std::pair<NodeId, NodeId>, Sign> seen;
  std::vector<SignedEdge> edges;
  for (const auto& r : raw) {
    NodeId a = id_of(r.u), b = id_of(r.v);
    if (a == b) {
      ++report.dropped_self_loops;
      continue;
    }
    if (a > b) std::swap(a, b);
    auto [it, inserted] = seen.emplace(std::make_pair(a, b), r.sign);
    if (!inserted) {
      ++report.dropped_duplicates;
      if (it->second != r.sign) ++report.conflicting_duplicates;
      continue;
    }
    edges.push_back({a, b, r.sign});
  }
  int n = static_cast<int>(labels.size());
  return {SignedGraph(n, std::move(edges), std::move(labels)), report};
}

LoadResult LoadEdgeListFile(const std::string& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return LoadEdgeList(in, options);
}

void WriteEdgeList(std::ostream& out, const SignedGraph& g, const WriteOptions& options) {
  auto name = [&](NodeId u) { return options.use_labels ? g.label(u) : std::to_string(u); };
  for (const auto& e : g.edges()) {
    out << name(e.u) << ' ' << name(e.v) << ' '
        << (e.sign == Sign::kPositive ? "+1" : "-1") << '\n';
  }
  if (options.keep_isolated) {
    for (NodeId u = 0; u < g.node_count(); ++u) {
      if (g.degree(u) == 0) out << name(u) << ' ' << name(u) << " +1\n";
    }
  }
}

void ExportDot(std::ostream& out, const SignedGraph& g) {
  if (g.node_count() > 200) throw GraphError("DOT export is limited to 200 nodes");
  out << "graph G {\n";
  for (NodeId u = 0; u < g.node_count(); ++u) {
    out << "  " << u << " [label=\"" << g.label(u) << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    if (e.sign == Sign::kNegative) out << " [style=dashed, color=red]";
    out << ";\n";
  }
  out << "}\n";
}

// ---------------------------------------------------------------------------

Components ConnectedComponents(const SignedGraph& g, std::span<const std::uint8_t> member,
                               const DeletionMask* mask) {
  Components c;
  c.id.assign(g.node_count(), -1);
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (!member[root] || c.id[root] != -1) continue;
    int label = c.count();
    c.size.push_back(0);
    c.id[root] = label;
    stack.push_back(root);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      ++c.size[label];
      for (const auto& a : g.neighbors(u)) {
        if (mask && !mask->alive(a.edge)) continue;
        if (!member[a.neighbor] || c.id[a.neighbor] != -1) continue;
        c.id[a.neighbor] = label;
        stack.push_back(a.neighbor);
      }
    }
  }
  return c;
}

Components ConnectedComponents(const SignedGraph& g, const DeletionMask* mask) {
  std::vector<std::uint8_t> all(g.node_count(), 1);
  return ConnectedComponents(g, all, mask);
}

int ConnectedComponentCount(const SignedGraph& g) { return ConnectedComponents(g).count(); }

NodeSet LargestConnectedComponent(const SignedGraph& g) {
  auto c = ConnectedComponents(g);
  if (c.count() == 0) return {};
  // Components are numbered by smallest member, so the first maximum wins ties.
  int best = static_cast<int>(std::max_element(c.size.begin(), c.size.end()) - c.size.begin());
  NodeSet out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (c.id[u] == best) out.push_back(u);
  }
  return out;
}

NodeSet KCore(const SignedGraph& g, int k) {
  if (k < 0) throw GraphError("k must be non-negative");
  std::vector<int> degree(g.node_count());
  std::vector<std::uint8_t> removed(g.node_count(), 0);
  std::vector<NodeId> queue;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    degree[u] = g.degree(u);
    if (degree[u] < k) {
      removed[u] = 1;
      queue.push_back(u);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (const auto& a : g.neighbors(queue[head])) {
      if (removed[a.neighbor]) continue;
      if (--degree[a.neighbor] < k) {
        removed[a.neighbor] = 1;
        queue.push_back(a.neighbor);
      }
    }
  }
  NodeSet out;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (!removed[u]) out.push_back(u);
  }
  return out;
}

Subgraph InducedSubgraph(const SignedGraph& g, const NodeSet& nodes) {
  Subgraph s;
  s.from_parent.assign(g.node_count(), -1);
  for (NodeId u : nodes) {
    if (u < 0 || u >= g.node_count()) throw GraphError("node id out of range");
    if (s.from_parent[u] != -1) continue;
    s.from_parent[u] = static_cast<NodeId>(s.to_parent.size());
    s.to_parent.push_back(u);
  }
  std::vector<SignedEdge> edges;
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto& e = g.edge(id);
    NodeId a = s.from_parent[e.u], b = s.from_parent[e.v];
    if (a < 0 || b < 0) continue;
    edges.push_back({a, b, e.sign});
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (NodeId u : s.to_parent) labels.push_back(g.label(u));
  }
  s.graph = SignedGraph(static_cast<int>(s.to_parent.size()), edges, std::move(labels));
  // The constructor re-sorts edges by (u, v); rebuild the id map to match.
  s.edge_to_parent.resize(s.graph.edge_count());
  for (EdgeId id = 0; id < s.graph.edge_count(); ++id) {
    const auto& e = s.graph.edge(id);
    s.edge_to_parent[id] = *g.FindEdge(s.to_parent[e.u], s.to_parent[e.v]);
  }
  return s;
}

SignedGraph DeleteEdges(const SignedGraph& g, const EdgeSet& removed) {
  DeletionMask mask(g.edge_count(), removed);
  std::vector<SignedEdge> kept;
  kept.reserve(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    if (mask.alive(id)) kept.push_back(g.edge(id));
  }
  return SignedGraph(g.node_count(), std::move(kept), g.labels());
}

}  // namespace mbed
