#include "edgepart/exact.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "edgepart/constraints.hpp"
#include "edgepart/errors.hpp"

namespace edgepart {

std::optional<std::uint64_t> bell_number(std::size_t n) {
  // Bell triangle.
  std::vector<std::uint64_t> row{1};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto x : row) {
      if (next.back() > std::numeric_limits<std::uint64_t>::max() - x) return std::nullopt;
      next.push_back(next.back() + x);
    }
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t for_each_set_partition(std::size_t n,
                                     const std::function<void(std::span<const std::size_t>)>& visit) {
  if (n == 0) {
    visit({});
    return 1;
  }
  std::vector<std::size_t> rgs(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max(rgs[0..i])
  std::uint64_t count = 0;
  while (true) {
    visit(rgs);
    ++count;
    // Increment the rightmost position that can still grow.
    std::size_t i = n - 1;
    while (i > 0 && rgs[i] > prefix_max[i - 1]) --i;
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return count;
}

ExactResult brute_force_optimum(const Graph& g, const ConstraintSet& cs, const EnumerationBudget& budget) {
  const std::size_t n = g.vertex_count();
  if (n > budget.max_vertices) {
    throw BudgetExceeded("exhaustive search limited to " + std::to_string(budget.max_vertices) +
                         " vertices, graph has " + std::to_string(n));
  }
  const auto bell = bell_number(n);
  if (!bell || *bell > budget.max_partitions) {
    throw BudgetExceeded("Bell(" + std::to_string(n) + ") partitions exceed the budget of " +
                         std::to_string(budget.max_partitions));
  }

  ExactResult best;
  best.cut = std::numeric_limits<double>::infinity();
  Partition scratch;
  scratch.labels.resize(n);
  best.visited = for_each_set_partition(n, [&](std::span<const std::size_t> rgs) {
    // Restricted-growth strings are already canonical labelings.
    std::copy(rgs.begin(), rgs.end(), scratch.labels.begin());
    scratch.cluster_count = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (!violations(scratch, cs).feasible()) return;
    const double cut = cut_value(g, scratch.labels);
    if (cut < best.cut) {
      best.cut = cut;
      best.feasible = true;
      scratch.cut_value = cut;
      best.partition = scratch;
    }
  });
  if (!best.feasible) best.cut = 0.0;
  return best;
}

SpanningForest max_spanning_tree_weight(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.u - 1].emplace_back(e.v - 1, e.weight);
    adj[e.v - 1].emplace_back(e.u - 1, e.weight);
  }

  SpanningForest forest;
  std::vector<bool> in_tree(n, false);
  std::size_t trees = 0;
  using Item = std::pair<double, std::size_t>;  // (weight, vertex), max-heap
  for (std::size_t root = 0; root < n; ++root) {
    if (in_tree[root]) continue;
    ++trees;
    std::priority_queue<Item> frontier;
    frontier.emplace(0.0, root);
    bool first = true;
    while (!frontier.empty()) {
      auto [w, v] = frontier.top();
      frontier.pop();
      if (in_tree[v]) continue;
      in_tree[v] = true;
      if (!first) {
        forest.weight += w;
        ++forest.edge_count;
      }
      first = false;
      for (auto [to, ew] : adj[v]) {
        if (!in_tree[to]) frontier.emplace(ew, to);
      }
    }
  }
  forest.connected = trees <= 1;
  return forest;
}

}  // namespace edgepart
