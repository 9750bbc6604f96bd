#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace edgepart {

/// 1-based vertex index, v_1..v_|V|.
using VertexId = std::uint32_t;

struct VertexPair {
  VertexId a = 0;
  VertexId b = 0;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Side constraints of a partitioning instance. Pairs are stored with a < b,
/// sorted and free of duplicates.
struct ConstraintSet {
  std::optional<std::size_t> max_cluster_size;
  std::vector<VertexPair> cohabitation;
  std::vector<VertexPair> non_cohabitation;

  bool empty() const noexcept {
    return !max_cluster_size && cohabitation.empty() && non_cohabitation.empty();
  }

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

/// Orders endpoints, sorts and dedups both pair lists, then checks that every
/// pair is in range and distinct, that no pair is both cohabiting and not, and
/// that the size bound is at least 1. Throws std::invalid_argument otherwise.
void canonicalize(ConstraintSet& cs, std::size_t vertex_count);

}  // namespace edgepart
