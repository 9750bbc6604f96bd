#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edgepart/constraint_set.hpp"

namespace edgepart {

/// 0-based position of an edge in a graph's lexicographic edge order. The
/// instance file and all user-facing output use position + 1.
using EdgeIndex = std::size_t;

struct WeightedEdge {
  VertexId u = 0;
  VertexId v = 0;
  double weight = 0.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

/// Immutable weighted undirected graph. Edges are normalized to u < v and
/// sorted lexicographically by (u, v); an edge's index is its sort position.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes. Throws std::invalid_argument on self-loops,
  /// parallel edges, out-of-range endpoints, non-positive or non-finite
  /// weights, or invalid constraints.
  Graph(std::size_t vertex_count, std::vector<WeightedEdge> edges, ConstraintSet constraints = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }
  const WeightedEdge& edge(EdgeIndex k) const { return edges_.at(k); }
  const ConstraintSet& constraints() const noexcept { return constraints_; }

  double total_weight() const noexcept { return total_weight_; }
  double max_weight() const noexcept { return max_weight_; }

  /// Index of edge {u, v} if present.
  std::optional<EdgeIndex> find_edge(VertexId u, VertexId v) const;

  /// All edge indices 0..|E|-1.
  std::vector<EdgeIndex> all_edge_indices() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<WeightedEdge> edges_;
  ConstraintSet constraints_;
  double total_weight_ = 0.0;
  double max_weight_ = 0.0;
};

/// Σ ω(e) over all edges; 0 for an edgeless graph.
inline double total_weight(const Graph& g) noexcept { return g.total_weight(); }

/// Connected-component labels over a subset of the edges. Labels are 0-based
/// and canonical: components are numbered in order of their smallest vertex.
struct ComponentLabeling {
  std::vector<std::size_t> label;  // label[v - 1]
  std::size_t component_count = 0;

  std::size_t of(VertexId v) const { return label.at(v - 1); }
};

ComponentLabeling components(const Graph& g, std::span<const EdgeIndex> active);
ComponentLabeling components(const Graph& g);

/// Component count only; avoids building the label vector.
std::size_t component_count(const Graph& g, std::span<const EdgeIndex> active);
std::size_t component_count(const Graph& g);

/// Parses the line-oriented instance format:
///   p <|V|> <|E|>     header, first record
///   e <u> <v> <w>     exactly |E| edges
///   b <U>             optional cluster-size bound
///   c <u> <v>         optional cohabitation pair
///   n <u> <v>         optional non-cohabitation pair
/// `#` starts a comment. Throws ParseError naming the offending line.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// Writes g in the instance format. Each entry of `comments` becomes a
/// leading `# ` line.
std::string format_graph(const Graph& g, std::span<const std::string> comments = {});
void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      std::span<const std::string> comments = {});

/// Shortest round-trip decimal representation of a double ("5", "0.25").
std::string format_number(double x);

}  // namespace edgepart
