#include "edgepart/constraints.hpp"

#include <stdexcept>

namespace edgepart {

ViolationReport violations(const Partition& p, const ConstraintSet& cs) {
  ViolationReport r;
  if (cs.max_cluster_size) {
    const std::size_t bound = *cs.max_cluster_size;
    for (auto size : p.cluster_sizes()) {
      if (size > bound) r.size_excess += size - bound;
    }
  }
  for (const auto& pair : cs.cohabitation) {
    if (p.label(pair.a) != p.label(pair.b)) ++r.cohab_breaks;
  }
  for (const auto& pair : cs.non_cohabitation) {
    if (p.label(pair.a) == p.label(pair.b)) ++r.noncohab_breaks;
  }
  return r;
}

double default_lambda(const Graph& g) noexcept { return g.total_weight() + 1.0; }

double penalized_fitness(const Partition& p, const ConstraintSet& cs, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("penalty weight lambda must be positive");
  return p.cut_value + lambda * static_cast<double>(violations(p, cs).total());
}

}  // namespace edgepart
