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


// Independent reference implementations for tests. Nothing here calls the
// library's own search or eigen routines.

#ifndef MBED_TESTS_ORACLE_H_
#define MBED_TESTS_ORACLE_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "mbed/graph.h"

namespace oracle {

struct E {
  int u, v, s;
};

inline std::vector<E> EdgesOf(const mbed::SignedGraph& g, const std::vector<int>& removed = {}) {
  std::vector<E> out;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (std::find(removed.begin(), removed.end(), id) != removed.end()) continue;
    const auto& e = g.edge(id);
    out.push_back({e.u, e.v, mbed::ToInt(e.sign)});
  }
  return out;
}

// Connected and balanced on the node subset `keep` (bitmask)?
inline bool ConnectedBalanced(int n, const std::vector<E>& edges, std::uint32_t keep) {
  if (keep == 0) return false;
  std::vector<int> colour(n, 0);  // 0 unseen, +1 / -1 sides
  int start = 0;
  while (!((keep >> start) & 1u)) ++start;
  colour[start] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const E& e : edges) {
      if (!((keep >> e.u) & 1u) || !((keep >> e.v) & 1u)) continue;
      if (colour[e.u] && !colour[e.v]) colour[e.v] = colour[e.u] * e.s, changed = true;
      if (colour[e.v] && !colour[e.u]) colour[e.u] = colour[e.v] * e.s, changed = true;
      if (colour[e.u] && colour[e.v] && colour[e.u] * e.s != colour[e.v]) return false;
    }
  }
  for (int u = 0; u < n; ++u) {
    if (((keep >> u) & 1u) && !colour[u]) return false;
  }
  return true;
}

inline int Delta(const mbed::SignedGraph& g, const std::vector<int>& removed = {}) {
  const int n = g.node_count();
  const auto edges = EdgesOf(g, removed);
  int best = 0;
  for (std::uint32_t keep = 1; keep < (1u << n); ++keep) {
    const int size = __builtin_popcount(keep);
    if (size > best && ConnectedBalanced(n, edges, keep)) best = size;
  }
  return best;
}

// Whole graph balanced (every component), by brute force over colourings.
inline bool Balanced(int n, const std::vector<E>& edges) {
  for (std::uint32_t c = 0; c < (1u << n); ++c) {
    bool ok = true;
    for (const E& e : edges) {
      const int cu = ((c >> e.u) & 1u) ? -1 : 1, cv = ((c >> e.v) & 1u) ? -1 : 1;
      if (cu * e.s != cv) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

// Frustration number: fewest deleted nodes leaving a balanced graph.
inline int Nu(const mbed::SignedGraph& g) {
  const int n = g.node_count();
  const auto edges = EdgesOf(g);
  int best = n;
  for (std::uint32_t del = 0; del < (1u << n); ++del) {
    const int k = __builtin_popcount(del);
    if (k >= best) continue;
    std::vector<E> kept;
    for (const E& e : edges) {
      if (!((del >> e.u) & 1u) && !((del >> e.v) & 1u)) kept.push_back(e);
    }
    if (Balanced(n, kept)) best = k;
  }
  return best;
}

// Frustration index: fewest deleted edges leaving a balanced graph.
inline int Epsilon(const mbed::SignedGraph& g) {
  const int n = g.node_count();
  const auto edges = EdgesOf(g);
  const int m = static_cast<int>(edges.size());
  int best = m;
  for (std::uint32_t del = 0; del < (1u << m); ++del) {
    const int k = __builtin_popcount(del);
    if (k >= best) continue;
    std::vector<E> kept;
    for (int i = 0; i < m; ++i) {
      if (!((del >> i) & 1u)) kept.push_back(edges[i]);
    }
    if (Balanced(n, kept)) best = k;
  }
  return best;
}

// Cyclic Jacobi rotations; returns eigenvalues in ascending order.
inline std::vector<double> Eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::vector<double>> Laplacian(const mbed::SignedGraph& g,
                                                  const std::vector<int>& removed = {}) {
  const int n = g.node_count();
  std::vector<std::vector<double>> l(n, std::vector<double>(n, 0.0));
  for (const E& e : EdgesOf(g, removed)) {
    l[e.u][e.u] += 1;
    l[e.v][e.v] += 1;
    l[e.u][e.v] -= e.s;
    l[e.v][e.u] -= e.s;
  }
  return l;
}

inline double Lambda1(const mbed::SignedGraph& g, const std::vector<int>& removed = {}) {
  if (g.node_count() == 0) return 0;
  return Eigenvalues(Laplacian(g, removed)).front();
}

// Contradictory pairs at x by enumerating edge pairs against side labels
// (1 = V1, 2 = V2, 0 = out): same-side neighbours need equal signs,
// cross-side neighbours opposite signs.
inline long long CepPairs(const mbed::SignedGraph& g, const std::vector<int>& side, int x) {
  std::vector<std::pair<int, int>> into;  // (side, sign)
  for (const auto& a : g.neighbors(x)) {
    if (side[a.neighbor] != 0) into.push_back({side[a.neighbor], mbed::ToInt(a.sign)});
  }
  long long pairs = 0;
  for (std::size_t i = 0; i < into.size(); ++i) {
    for (std::size_t j = i + 1; j < into.size(); ++j) {
      const bool same_side = into[i].first == into[j].first;
      const bool same_sign = into[i].second == into[j].second;
      if (same_side != same_sign) ++pairs;
    }
  }
  return pairs;
}

}  // namespace oracle

#endif  // MBED_TESTS_ORACLE_H_
