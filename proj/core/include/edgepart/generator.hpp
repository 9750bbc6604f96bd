#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "edgepart/graph.hpp"

namespace edgepart {

struct WeightDistribution {
  enum class Kind { uniform_int, uniform_real };

  Kind kind = Kind::uniform_int;
  double lo = 1.0;
  double hi = 10.0;

  /// "int:LO..HI" or "real:LO..HI", with 0 < LO <= HI.
  static WeightDistribution parse(std::string_view text);
  std::string to_string() const;
};

struct GeneratorSpec {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  WeightDistribution weights;
  std::uint64_t seed = 1;
  bool connected = true;
  std::optional<std::size_t> max_cluster_size;  // emitted as a `b` record

  /// Throws std::invalid_argument if no simple graph has this shape.
  void validate() const;
};

/// Random simple graph of exactly spec.vertices / spec.edges. When connected,
/// a random spanning tree is laid down first and the remaining edges are drawn
/// uniformly without replacement from the non-edges. Weights are i.i.d.
/// Deterministic per seed.
Graph generate_instance(const GeneratorSpec& spec);

/// Pinned generator settings for three stand-in instances with common
/// benchmark shapes: (15 vertices, 55 edges), (30, 45) and (121, 1980).
/// These are shape-matched substitutes, not the original instances.
GeneratorSpec standin_spec(int which);

}  // namespace edgepart
