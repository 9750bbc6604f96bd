#include "edgepart/reduction.hpp"

#include <algorithm>
#include <stdexcept>

#include "edgepart/disjoint_set.hpp"

namespace edgepart {

ReducedGraph::ReducedGraph(const Graph& base, std::vector<EdgeIndex> active_edges,
                           std::vector<EdgeIndex> restored_edges, double threshold,
                           std::size_t kept_count)
    : base_(&base),
      active_(std::move(active_edges)),
      restored_(std::move(restored_edges)),
      threshold_(threshold),
      kept_count_(kept_count) {}

ReducedGraph reduce(const Graph& g, double threshold) {
  const auto edges = g.edges();
  const std::size_t target = component_count(g);

  DisjointSet dsu(g.vertex_count());
  std::vector<EdgeIndex> active;
  std::vector<EdgeIndex> removed;
  for (EdgeIndex k = 0; k < edges.size(); ++k) {
    if (edges[k].weight <= threshold) {
      removed.push_back(k);
    } else {
      active.push_back(k);
      dsu.unite(edges[k].u - 1, edges[k].v - 1);
    }
  }
  const std::size_t kept = active.size();

  // Weights are static, so one descending pass is the same as repeatedly
  // picking the heaviest removed edge.
  std::stable_sort(removed.begin(), removed.end(),
                   [&](EdgeIndex a, EdgeIndex b) { return edges[a].weight > edges[b].weight; });
  std::vector<EdgeIndex> restored;
  for (EdgeIndex k : removed) {
    if (dsu.set_count() == target) break;
    if (dsu.unite(edges[k].u - 1, edges[k].v - 1)) restored.push_back(k);
  }

  std::sort(restored.begin(), restored.end());
  active.insert(active.end(), restored.begin(), restored.end());
  std::sort(active.begin(), active.end());
  return ReducedGraph(g, std::move(active), std::move(restored), threshold, kept);
}

ReducedGraph full_edge_set(const Graph& g) {
  return ReducedGraph(g, g.all_edge_indices(), {}, 0.0, g.edge_count());
}

std::vector<std::pair<double, std::size_t>> edge_survival_curve(const Graph& g,
                                                                std::span<const double> thresholds) {
  if (!std::is_sorted(thresholds.begin(), thresholds.end())) {
    throw std::invalid_argument("thresholds must be ascending");
  }
  std::vector<std::pair<double, std::size_t>> curve;
  curve.reserve(thresholds.size());
  for (double t : thresholds) curve.emplace_back(t, reduce(g, t).size());
  return curve;
}

}  // namespace edgepart
