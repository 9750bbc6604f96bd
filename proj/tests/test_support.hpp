#pragma once

// Independent reference routines for tests. Nothing here calls into the
// library code it is used to check.

#include <cstddef>
#include <cstdint>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "edgepart/constraint_set.hpp"
#include "edgepart/graph.hpp"

namespace edgepart::testing {

/// Erdős–Rényi style graph with integer weights in [lo, hi]; optionally
/// patched to be connected by chaining components.
inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double density, int lo = 1, int hi = 10,
                          bool connected = true) {
  std::bernoulli_distribution take(density);
  std::uniform_int_distribution<int> weight(lo, hi);
  std::vector<std::vector<bool>> has(n + 1, std::vector<bool>(n + 1, false));
  std::vector<WeightedEdge> edges;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (take(rng)) {
        edges.push_back({u, v, static_cast<double>(weight(rng))});
        has[u][v] = true;
      }
    }
  }
  if (connected && n > 1) {
    // Attach each vertex's component to vertex 1's via a direct edge when needed.
    std::vector<std::size_t> comp(n + 1);
    for (VertexId v = 1; v <= n; ++v) comp[v] = v;
    auto find = [&](std::size_t x) {
      while (comp[x] != x) x = comp[x];
      return x;
    };
    for (const auto& e : edges) comp[find(e.u)] = find(e.v);
    for (VertexId v = 2; v <= n; ++v) {
      if (find(v) != find(1)) {
        std::uniform_int_distribution<VertexId> other(1, v - 1);
        VertexId u = other(rng);
        while (find(u) != find(1)) u = other(rng);
        if (!has[u][v]) {
          edges.push_back({u, v, static_cast<double>(weight(rng))});
          has[u][v] = true;
        }
        comp[find(v)] = find(1);
      }
    }
  }
  return Graph(n, std::move(edges));
}

/// Breadth-first component labels (label per vertex, 0-based by first
/// appearance in vertex order) over the given edge subset.
inline std::vector<std::size_t> bfs_labels(const Graph& g, const std::vector<EdgeIndex>& active,
                                           std::size_t* count = nullptr) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (auto k : active) {
    const auto& e = g.edges()[k];
    adj[e.u - 1].push_back(e.v - 1);
    adj[e.v - 1].push_back(e.u - 1);
  }
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(n, unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != unset) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : adj[x]) {
        if (label[y] == unset) {
          label[y] = next;
          q.push(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return label;
}

/// Direct cut summation: every edge, endpoints in different clusters.
inline double naive_cut(const Graph& g, const std::vector<std::size_t>& labels) {
  double cut = 0;
  for (const auto& e : g.edges()) {
    if (labels[e.u - 1] != labels[e.v - 1]) cut += e.weight;
  }
  return cut;
}

/// Same-grouping test for two labelings, independent of label names.
inline bool same_grouping(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
    }
  }
  return true;
}

/// All labelings of n vertices with values < n, deduplicated by grouping.
/// Exponential; only for n <= 6.
inline std::vector<std::vector<std::size_t>> all_groupings_naive(std::size_t n) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> lab(n, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      lab[i] = c % n;
      c /= n;
    }
    // Canonical relabel by first appearance.
    std::vector<std::size_t> map(n, static_cast<std::size_t>(-1));
    std::vector<std::size_t> canon(n);
    std::size_t next = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (map[lab[i]] == static_cast<std::size_t>(-1)) map[lab[i]] = next++;
      canon[i] = map[lab[i]];
    }
    seen.insert(canon);
  }
  return {seen.begin(), seen.end()};
}

/// Whether each cluster of `labels` is connected using only the given edges
/// whose endpoints are both inside it. Per-cluster BFS.
inline bool clusters_connected(const Graph& g, const std::vector<EdgeIndex>& edges,
                               const std::vector<std::size_t>& labels) {
  std::vector<EdgeIndex> internal;
  for (auto k : edges) {
    const auto& e = g.edges()[k];
    if (labels[e.u - 1] == labels[e.v - 1]) internal.push_back(k);
  }
  std::size_t comps = 0;
  bfs_labels(g, internal, &comps);
  std::set<std::size_t> clusters(labels.begin(), labels.end());
  return comps == clusters.size();
}

}  // namespace edgepart::testing
