#include "edgepart/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace edgepart {

namespace {

double parse_bound(std::string_view s, std::string_view whole) {
  double x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("bad weight distribution '" + std::string(whole) +
                                "', expected int:LO..HI or real:LO..HI");
  }
  return x;
}

}  // namespace

WeightDistribution WeightDistribution::parse(std::string_view text) {
  const auto colon = text.find(':');
  const auto dots = text.find("..");
  if (colon == std::string_view::npos || dots == std::string_view::npos || dots < colon) {
    throw std::invalid_argument("bad weight distribution '" + std::string(text) +
                                "', expected int:LO..HI or real:LO..HI");
  }
  WeightDistribution d;
  const auto kind = text.substr(0, colon);
  if (kind == "int") {
    d.kind = Kind::uniform_int;
  } else if (kind == "real") {
    d.kind = Kind::uniform_real;
  } else {
    throw std::invalid_argument("unknown weight distribution kind '" + std::string(kind) + "'");
  }
  d.lo = parse_bound(text.substr(colon + 1, dots - colon - 1), text);
  d.hi = parse_bound(text.substr(dots + 2), text);
  if (!(d.lo > 0.0) || d.hi < d.lo) {
    throw std::invalid_argument("weight range in '" + std::string(text) + "' must satisfy 0 < LO <= HI");
  }
  if (d.kind == Kind::uniform_int && (d.lo != std::floor(d.lo) || d.hi != std::floor(d.hi))) {
    throw std::invalid_argument("integer weight range in '" + std::string(text) + "' has fractional bounds");
  }
  return d;
}

std::string WeightDistribution::to_string() const {
  return std::string(kind == Kind::uniform_int ? "int:" : "real:") + format_number(lo) + ".." +
         format_number(hi);
}

void GeneratorSpec::validate() const {
  if (vertices < 1) throw std::invalid_argument("generator needs at least one vertex");
  const std::size_t max_edges = vertices * (vertices - 1) / 2;
  if (edges > max_edges) {
    throw std::invalid_argument(std::to_string(edges) + " edges exceed the " + std::to_string(max_edges) +
                                " possible on " + std::to_string(vertices) + " vertices");
  }
  if (connected && edges + 1 < vertices) {
    throw std::invalid_argument("a connected graph on " + std::to_string(vertices) + " vertices needs at least " +
                                std::to_string(vertices - 1) + " edges");
  }
  if (max_cluster_size && *max_cluster_size < 1) {
    throw std::invalid_argument("cluster-size bound must be at least 1");
  }
}

Graph generate_instance(const GeneratorSpec& spec) {
  spec.validate();
  const std::size_t n = spec.vertices;
  std::mt19937_64 rng(spec.seed);

  auto key = [n](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::uint64_t>(a) * n + b;
  };
  std::unordered_set<std::uint64_t> present;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(spec.edges);

  if (spec.connected && n > 1) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> parent(0, i - 1);
      const std::size_t a = order[i];
      const std::size_t b = order[parent(rng)];
      present.insert(key(a, b));
      pairs.emplace_back(static_cast<VertexId>(a + 1), static_cast<VertexId>(b + 1));
    }
  }

  const std::size_t remaining = spec.edges - pairs.size();
  const std::size_t all_pairs = n * (n - 1) / 2;
  if (remaining > 0 && all_pairs <= 4'000'000) {
    // Partial Fisher-Yates over the explicit list of non-edges.
    std::vector<std::pair<VertexId, VertexId>> candidates;
    candidates.reserve(all_pairs - pairs.size());
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!present.count(key(a, b))) {
          candidates.emplace_back(static_cast<VertexId>(a + 1), static_cast<VertexId>(b + 1));
        }
      }
    }
    for (std::size_t i = 0; i < remaining; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, candidates.size() - 1);
      std::swap(candidates[i], candidates[pick(rng)]);
      pairs.push_back(candidates[i]);
    }
  } else if (remaining > 0) {
    std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
    while (pairs.size() < spec.edges) {
      const std::size_t a = vertex(rng);
      const std::size_t b = vertex(rng);
      if (a == b || !present.insert(key(a, b)).second) continue;
      pairs.emplace_back(static_cast<VertexId>(a + 1), static_cast<VertexId>(b + 1));
    }
  }

  std::vector<WeightedEdge> edges;
  edges.reserve(pairs.size());
  std::uniform_int_distribution<long long> int_weight(static_cast<long long>(spec.weights.lo),
                                                      static_cast<long long>(spec.weights.hi));
  std::uniform_real_distribution<double> real_weight(spec.weights.lo, spec.weights.hi);
  for (auto [u, v] : pairs) {
    double w = spec.weights.kind == WeightDistribution::Kind::uniform_int
                   ? static_cast<double>(int_weight(rng))
                   : real_weight(rng);
    if (w <= 0.0) w = spec.weights.lo;
    edges.push_back({u, v, w});
  }

  ConstraintSet cs;
  cs.max_cluster_size = spec.max_cluster_size;
  return Graph(n, std::move(edges), std::move(cs));
}

// Integer weights 1..20 and a cluster-size bound of roughly |V|/3. Without a
// bound the single-cluster partition has cut 0 at every threshold, so the
// sweep would have nothing to measure.
GeneratorSpec standin_spec(int which) {
  GeneratorSpec spec;
  spec.weights = {WeightDistribution::Kind::uniform_int, 1.0, 20.0};
  switch (which) {
    case 1:
      spec.vertices = 15;
      spec.edges = 55;
      spec.seed = 20201;
      spec.max_cluster_size = 5;
      break;
    case 2:
      spec.vertices = 30;
      spec.edges = 45;
      spec.seed = 20202;
      spec.max_cluster_size = 10;
      break;
    case 3:
      spec.vertices = 121;
      spec.edges = 1980;
      spec.seed = 20203;
      spec.max_cluster_size = 40;
      break;
    default:
      throw std::invalid_argument("stand-in instance must be 1, 2 or 3");
  }
  return spec;
}

}  // namespace edgepart
