#include "edgepart/encoding.hpp"

#include <stdexcept>
#include <unordered_map>

#include "edgepart/disjoint_set.hpp"
#include "edgepart/errors.hpp"

namespace edgepart {

Chromosome Chromosome::from_string(std::string_view bits) {
  std::vector<Gene> genes;
  genes.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("chromosome character " + std::to_string(i + 1) + " is '" +
                                  std::string(1, bits[i]) + "', expected 0 or 1");
    }
    genes.push_back(static_cast<Gene>(bits[i] - '0'));
  }
  return Chromosome(std::move(genes));
}

std::string Chromosome::to_string() const {
  std::string s(genes_.size(), '0');
  for (std::size_t i = 0; i < genes_.size(); ++i) s[i] = genes_[i] ? '1' : '0';
  return s;
}

std::vector<std::size_t> Partition::cluster_sizes() const {
  std::vector<std::size_t> sizes(cluster_count, 0);
  for (auto l : labels) ++sizes[l];
  return sizes;
}

std::vector<std::vector<VertexId>> Partition::clusters() const {
  std::vector<std::vector<VertexId>> out(cluster_count);
  for (std::size_t i = 0; i < labels.size(); ++i) out[labels[i]].push_back(static_cast<VertexId>(i + 1));
  return out;
}

double cut_value(const Graph& g, std::span<const std::size_t> labels) {
  double cut = 0.0;
  for (const auto& e : g.edges()) {
    if (labels[e.u - 1] != labels[e.v - 1]) cut += e.weight;
  }
  return cut;
}

Partition make_partition(const Graph& g, std::span<const std::size_t> raw) {
  if (raw.size() != g.vertex_count()) {
    throw ContractError("partition labels " + std::to_string(raw.size()) + " vertices, graph has " +
                        std::to_string(g.vertex_count()));
  }
  Partition p;
  p.labels.resize(raw.size());
  std::unordered_map<std::size_t, std::size_t> canonical;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [it, inserted] = canonical.try_emplace(raw[i], p.cluster_count);
    if (inserted) ++p.cluster_count;
    p.labels[i] = it->second;
  }
  p.cut_value = cut_value(g, p.labels);
  return p;
}

Partition decode(const Chromosome& c, const ReducedGraph& rg) {
  if (c.size() != rg.size()) {
    throw ContractError("chromosome has " + std::to_string(c.size()) + " genes, reduced graph has " +
                        std::to_string(rg.size()) + " active edges");
  }
  const Graph& g = rg.base();
  DisjointSet dsu(g.vertex_count());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) {
      const auto& e = rg.active_edge(k);
      dsu.unite(e.u - 1, e.v - 1);
    }
  }
  Partition p;
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_label(g.vertex_count(), unset);
  p.labels.resize(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    auto r = dsu.find(i);
    if (root_label[r] == unset) root_label[r] = p.cluster_count++;
    p.labels[i] = root_label[r];
  }
  p.cut_value = cut_value(g, p.labels);
  return p;
}

Chromosome encode(const Partition& p, const ReducedGraph& rg) {
  Chromosome c(rg.size());
  for (std::size_t k = 0; k < rg.size(); ++k) {
    const auto& e = rg.active_edge(k);
    c[k] = p.label(e.u) == p.label(e.v) ? 0 : 1;
  }
  return c;
}

bool representable(const Partition& p, const ReducedGraph& rg) {
  // Each cluster is connected through intra-cluster active edges iff joining
  // those edges leaves exactly one component per cluster.
  DisjointSet dsu(rg.base().vertex_count());
  for (std::size_t k = 0; k < rg.size(); ++k) {
    const auto& e = rg.active_edge(k);
    if (p.label(e.u) == p.label(e.v)) dsu.unite(e.u - 1, e.v - 1);
  }
  return dsu.set_count() == p.cluster_count;
}

Chromosome normalize(const Chromosome& c, const ReducedGraph& rg) { return encode(decode(c, rg), rg); }

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    out += "v " + std::to_string(i + 1) + " " + std::to_string(p.labels[i] + 1) + "\n";
  }
  out += "cut " + format_number(p.cut_value) + "\n";
  return out;
}

}  // namespace edgepart
