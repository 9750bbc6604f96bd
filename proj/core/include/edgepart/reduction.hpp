#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "edgepart/graph.hpp"

namespace edgepart {

/// The edge subset a chromosome is defined over, after threshold deletion and
/// connectivity restoration. Holds a non-owning pointer to its base graph,
/// which must outlive it.
class ReducedGraph {
 public:
  ReducedGraph(const Graph& base, std::vector<EdgeIndex> active_edges,
               std::vector<EdgeIndex> restored_edges, double threshold, std::size_t kept_count);

  const Graph& base() const noexcept { return *base_; }

  /// Original edge indices, ascending. Gene k of a chromosome refers to
  /// active_edges()[k].
  std::span<const EdgeIndex> active_edges() const noexcept { return active_; }
  std::span<const EdgeIndex> restored_edges() const noexcept { return restored_; }
  std::size_t size() const noexcept { return active_.size(); }

  double threshold() const noexcept { return threshold_; }

  /// Edges surviving the deletion step alone (weight > threshold).
  std::size_t kept_count() const noexcept { return kept_count_; }
  std::size_t restored_count() const noexcept { return restored_.size(); }
  std::size_t removed_count() const noexcept { return base_->edge_count() - active_.size(); }

  const WeightedEdge& active_edge(std::size_t gene) const { return base_->edge(active_.at(gene)); }

 private:
  const Graph* base_;
  std::vector<EdgeIndex> active_;
  std::vector<EdgeIndex> restored_;
  double threshold_;
  std::size_t kept_count_;
};

/// Deletes every edge with weight <= threshold, then scans the deleted edges
/// by decreasing weight (ties: ascending index) and restores each one that
/// merges two components, until the component count of the full graph is
/// reached again.
ReducedGraph reduce(const Graph& g, double threshold);

/// The unreduced edge set; equivalent to reduce(g, 0) for positive weights.
ReducedGraph full_edge_set(const Graph& g);

/// (threshold, active edge count) for each threshold. Throws
/// std::invalid_argument unless thresholds are ascending.
std::vector<std::pair<double, std::size_t>> edge_survival_curve(const Graph& g,
                                                                std::span<const double> thresholds);

}  // namespace edgepart
