#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "edgepart/graph.hpp"
#include "edgepart/reduction.hpp"

namespace edgepart {

/// One gene per active edge: 0 = intra-cluster, 1 = inter-cluster.
class Chromosome {
 public:
  using Gene = std::uint8_t;

  Chromosome() = default;
  explicit Chromosome(std::size_t length, Gene fill = 0) : genes_(length, fill) {}
  explicit Chromosome(std::vector<Gene> genes) : genes_(std::move(genes)) {}

  /// Parses a string of '0'/'1' characters; throws std::invalid_argument.
  static Chromosome from_string(std::string_view bits);
  std::string to_string() const;

  std::size_t size() const noexcept { return genes_.size(); }
  bool empty() const noexcept { return genes_.empty(); }
  Gene operator[](std::size_t k) const { return genes_[k]; }
  Gene& operator[](std::size_t k) { return genes_[k]; }
  void flip(std::size_t k) { genes_[k] ^= 1; }

  const std::vector<Gene>& genes() const noexcept { return genes_; }
  auto begin() const noexcept { return genes_.begin(); }
  auto end() const noexcept { return genes_.end(); }

  friend bool operator==(const Chromosome&, const Chromosome&) = default;
  friend auto operator<=>(const Chromosome&, const Chromosome&) = default;

 private:
  std::vector<Gene> genes_;
};

/// Assignment of every vertex to a cluster. Cluster ids are 0-based and
/// canonical: numbered by the smallest vertex each cluster contains, so two
/// partitions are equal iff they group vertices identically.
struct Partition {
  std::vector<std::size_t> labels;  // labels[v - 1]
  std::size_t cluster_count = 0;
  double cut_value = 0.0;

  std::size_t label(VertexId v) const { return labels.at(v - 1); }
  std::vector<std::size_t> cluster_sizes() const;
  std::vector<std::vector<VertexId>> clusters() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.labels == b.labels;
  }
};

/// Relabels `raw` canonically and computes the cut over all edges of g.
/// raw.size() must equal g.vertex_count().
Partition make_partition(const Graph& g, std::span<const std::size_t> raw);

/// Σ ω(e) over edges of g whose endpoints carry different labels.
double cut_value(const Graph& g, std::span<const std::size_t> labels);

/// Clusters are the connected components of the 0-gene active edges. The cut
/// is measured on the full base graph, not only the active edges. Every bit
/// string decodes; a 1-gene whose endpoints end up together anyway is simply
/// overridden. Throws ContractError on a length mismatch.
Partition decode(const Chromosome& c, const ReducedGraph& rg);

/// Gene k = 0 iff both endpoints of active edge k share a cluster in p.
Chromosome encode(const Partition& p, const ReducedGraph& rg);

/// True iff every cluster of p is connected through active edges, i.e. some
/// chromosome decodes to exactly p.
bool representable(const Partition& p, const ReducedGraph& rg);

/// encode(decode(c)): rewrites redundant 1-genes to 0. Idempotent and
/// cut-preserving.
Chromosome normalize(const Chromosome& c, const ReducedGraph& rg);

/// Human-readable output: one `v <vertex> <cluster>` line per vertex, with
/// clusters numbered from 1, followed by `cut <value>`.
std::string format_partition(const Partition& p);

}  // namespace edgepart
