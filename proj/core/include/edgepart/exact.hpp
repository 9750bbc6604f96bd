#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "edgepart/constraint_set.hpp"
#include "edgepart/encoding.hpp"
#include "edgepart/graph.hpp"

namespace edgepart {

struct EnumerationBudget {
  std::size_t max_vertices = 12;
  std::uint64_t max_partitions = 4'213'597;  // Bell(12)
};

/// Bell(n), or nullopt if it overflows 64 bits.
std::optional<std::uint64_t> bell_number(std::size_t n);

/// Calls visit once per set partition of n elements, as a restricted-growth
/// string: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]). Returns the number
/// of strings visited (Bell(n)).
std::uint64_t for_each_set_partition(std::size_t n,
                                     const std::function<void(std::span<const std::size_t>)>& visit);

struct ExactResult {
  bool feasible = false;
  Partition partition;  // meaningful only when feasible
  double cut = 0.0;
  std::uint64_t visited = 0;
};

/// Minimum-cut partition satisfying cs, found by enumerating every set
/// partition. Ties go to the first in enumeration order. Throws
/// BudgetExceeded instead of truncating when |V| or Bell(|V|) is over budget.
ExactResult brute_force_optimum(const Graph& g, const ConstraintSet& cs,
                                const EnumerationBudget& budget = {});

struct SpanningForest {
  double weight = 0.0;
  std::size_t edge_count = 0;
  bool connected = true;  // false: weight is that of a maximum spanning forest
};

/// Maximum-weight spanning tree (forest on disconnected input) by Prim's
/// algorithm, one tree per component.
SpanningForest max_spanning_tree_weight(const Graph& g);

}  // namespace edgepart
