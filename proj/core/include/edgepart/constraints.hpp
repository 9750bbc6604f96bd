#pragma once

#include <cstddef>

#include "edgepart/constraint_set.hpp"
#include "edgepart/encoding.hpp"
#include "edgepart/graph.hpp"

namespace edgepart {

struct ViolationReport {
  std::size_t size_excess = 0;      // Σ max(0, |C_i| - U)
  std::size_t cohab_breaks = 0;     // cohabitation pairs split apart
  std::size_t noncohab_breaks = 0;  // non-cohabitation pairs placed together

  std::size_t total() const noexcept { return size_excess + cohab_breaks + noncohab_breaks; }
  bool feasible() const noexcept { return total() == 0; }

  friend bool operator==(const ViolationReport&, const ViolationReport&) = default;
};

ViolationReport violations(const Partition& p, const ConstraintSet& cs);

/// Penalty weight under which every feasible partition beats every
/// infeasible one: total_weight(g) + 1.
double default_lambda(const Graph& g) noexcept;

/// cut_value + lambda * (size_excess + cohab_breaks + noncohab_breaks).
/// Throws std::invalid_argument unless lambda > 0.
double penalized_fitness(const Partition& p, const ConstraintSet& cs, double lambda);

}  // namespace edgepart
