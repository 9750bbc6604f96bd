#include "edgepart/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "edgepart/disjoint_set.hpp"
#include "edgepart/errors.hpp"

namespace edgepart {

void canonicalize(ConstraintSet& cs, std::size_t vertex_count) {
  if (cs.max_cluster_size && *cs.max_cluster_size < 1) {
    throw std::invalid_argument("cluster-size bound must be at least 1");
  }
  auto fix = [&](std::vector<VertexPair>& pairs, const char* kind) {
    for (auto& p : pairs) {
      if (p.a == p.b) {
        throw std::invalid_argument(std::string(kind) + " pair (" + std::to_string(p.a) + ", " +
                                    std::to_string(p.b) + ") has identical endpoints");
      }
      if (p.a < 1 || p.b < 1 || p.a > vertex_count || p.b > vertex_count) {
        throw std::invalid_argument(std::string(kind) + " pair (" + std::to_string(p.a) + ", " +
                                    std::to_string(p.b) + ") is out of range 1.." +
                                    std::to_string(vertex_count));
      }
      if (p.a > p.b) std::swap(p.a, p.b);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  };
  fix(cs.cohabitation, "cohabitation");
  fix(cs.non_cohabitation, "non-cohabitation");

  std::vector<VertexPair> both;
  std::set_intersection(cs.cohabitation.begin(), cs.cohabitation.end(),
                        cs.non_cohabitation.begin(), cs.non_cohabitation.end(),
                        std::back_inserter(both));
  if (!both.empty()) {
    throw std::invalid_argument("pair (" + std::to_string(both.front().a) + ", " +
                                std::to_string(both.front().b) +
                                ") is both a cohabitation and a non-cohabitation constraint");
  }
}

Graph::Graph(std::size_t vertex_count, std::vector<WeightedEdge> edges, ConstraintSet constraints)
    : vertex_count_(vertex_count), edges_(std::move(edges)), constraints_(std::move(constraints)) {
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > vertex_count_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has an endpoint outside 1.." + std::to_string(vertex_count_));
    }
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has non-positive weight " + format_number(e.weight));
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(edges_[k].u) + ", " +
                                  std::to_string(edges_[k].v) + ")");
    }
  }
  for (const auto& e : edges_) {
    total_weight_ += e.weight;
    max_weight_ = std::max(max_weight_, e.weight);
  }
  canonicalize(constraints_, vertex_count_);
}

std::optional<EdgeIndex> Graph::find_edge(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const WeightedEdge& e, const std::pair<VertexId, VertexId>& key) {
                               return e.u != key.first ? e.u < key.first : e.v < key.second;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return static_cast<EdgeIndex>(it - edges_.begin());
}

std::vector<EdgeIndex> Graph::all_edge_indices() const {
  std::vector<EdgeIndex> all(edges_.size());
  std::iota(all.begin(), all.end(), EdgeIndex{0});
  return all;
}

namespace {

DisjointSet union_edges(const Graph& g, std::span<const EdgeIndex> active) {
  DisjointSet dsu(g.vertex_count());
  for (EdgeIndex k : active) {
    const auto& e = g.edge(k);
    dsu.unite(e.u - 1, e.v - 1);
  }
  return dsu;
}

ComponentLabeling label_from(DisjointSet& dsu) {
  const std::size_t n = dsu.element_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> root_label(n, unset);
  ComponentLabeling out;
  out.label.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = dsu.find(i);
    if (root_label[r] == unset) root_label[r] = out.component_count++;
    out.label[i] = root_label[r];
  }
  return out;
}

}  // namespace

ComponentLabeling components(const Graph& g, std::span<const EdgeIndex> active) {
  auto dsu = union_edges(g, active);
  return label_from(dsu);
}

ComponentLabeling components(const Graph& g) {
  auto all = g.all_edge_indices();
  return components(g, all);
}

std::size_t component_count(const Graph& g, std::span<const EdgeIndex> active) {
  return union_edges(g, active).set_count();
}

std::size_t component_count(const Graph& g) {
  DisjointSet dsu(g.vertex_count());
  for (const auto& e : g.edges()) dsu.unite(e.u - 1, e.v - 1);
  return dsu.set_count();
}

// ---------------------------------------------------------------------------
// Instance file I/O

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T>
T parse_field(std::string_view s, std::size_t line, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(s) + "'");
  }
  return value;
}

VertexId parse_vertex(std::string_view s, std::size_t line, std::size_t n) {
  auto v = parse_field<std::uint64_t>(s, line, "vertex");
  if (v < 1 || v > n) {
    throw ParseError(line, "vertex " + std::string(s) + " out of range 1.." + std::to_string(n));
  }
  return static_cast<VertexId>(v);
}

void expect_arity(const std::vector<std::string_view>& f, std::size_t n, std::size_t line) {
  if (f.size() != n) {
    throw ParseError(line, "'" + std::string(f[0]) + "' record expects " + std::to_string(n - 1) +
                               " fields, got " + std::to_string(f.size() - 1));
  }
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t vertex_count = 0;
  std::size_t declared_edges = 0;
  bool have_header = false;
  std::vector<WeightedEdge> edges;
  std::vector<std::size_t> edge_lines;
  ConstraintSet cs;
  std::vector<std::size_t> cohab_lines, noncohab_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto f = split_fields(line);
    if (f.empty()) continue;

    if (f[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      expect_arity(f, 3, line_no);
      vertex_count = parse_field<std::size_t>(f[1], line_no, "vertex count");
      declared_edges = parse_field<std::size_t>(f[2], line_no, "edge count");
      if (vertex_count < 1) throw ParseError(line_no, "graph must have at least one vertex");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "expected 'p' header before '" + std::string(f[0]) + "'");

    if (f[0] == "e") {
      expect_arity(f, 4, line_no);
      WeightedEdge e;
      e.u = parse_vertex(f[1], line_no, vertex_count);
      e.v = parse_vertex(f[2], line_no, vertex_count);
      e.weight = parse_field<double>(f[3], line_no, "weight");
      if (e.u == e.v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(e.u));
      if (!std::isfinite(e.weight) || e.weight <= 0.0) {
        throw ParseError(line_no, "weight must be positive, got '" + std::string(f[3]) + "'");
      }
      if (edges.size() == declared_edges) {
        throw ParseError(line_no, "more edges than the " + std::to_string(declared_edges) +
                                      " declared in the header");
      }
      if (e.u > e.v) std::swap(e.u, e.v);
      edges.push_back(e);
      edge_lines.push_back(line_no);
    } else if (f[0] == "b") {
      expect_arity(f, 2, line_no);
      if (cs.max_cluster_size) throw ParseError(line_no, "duplicate 'b' record");
      auto bound = parse_field<std::size_t>(f[1], line_no, "cluster-size bound");
      if (bound < 1) throw ParseError(line_no, "cluster-size bound must be at least 1");
      cs.max_cluster_size = bound;
    } else if (f[0] == "c" || f[0] == "n") {
      expect_arity(f, 3, line_no);
      VertexPair p{parse_vertex(f[1], line_no, vertex_count), parse_vertex(f[2], line_no, vertex_count)};
      if (p.a == p.b) throw ParseError(line_no, "constraint pair has identical endpoints");
      if (p.a > p.b) std::swap(p.a, p.b);
      if (f[0] == "c") {
        cs.cohabitation.push_back(p);
        cohab_lines.push_back(line_no);
      } else {
        cs.non_cohabitation.push_back(p);
        noncohab_lines.push_back(line_no);
      }
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(f[0]) + "'");
    }
  }

  if (!have_header) throw ParseError(line_no, "missing 'p' header");
  if (edges.size() != declared_edges) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                  std::to_string(edges.size()));
  }

  // Duplicate detection, reported at the second occurrence.
  {
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return edges[a].u != edges[b].u ? edges[a].u < edges[b].u : edges[a].v < edges[b].v;
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
      const auto& a = edges[order[i - 1]];
      const auto& b = edges[order[i]];
      if (a.u == b.u && a.v == b.v) {
        throw ParseError(std::max(edge_lines[order[i]], edge_lines[order[i - 1]]),
                         "duplicate edge (" + std::to_string(b.u) + ", " + std::to_string(b.v) + ")");
      }
    }
  }
  for (std::size_t i = 0; i < cs.cohabitation.size(); ++i) {
    const auto& p = cs.cohabitation[i];
    for (std::size_t j = 0; j < cs.non_cohabitation.size(); ++j) {
      if (cs.non_cohabitation[j] == p) {
        throw ParseError(std::max(cohab_lines[i], noncohab_lines[j]),
                         "pair (" + std::to_string(p.a) + ", " + std::to_string(p.b) +
                             ") is both a cohabitation and a non-cohabitation constraint");
      }
    }
  }

  return Graph(vertex_count, std::move(edges), std::move(cs));
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string format_graph(const Graph& g, std::span<const std::string> comments) {
  std::string out;
  for (const auto& c : comments) out += "# " + c + "\n";
  out += "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_number(e.weight) + "\n";
  }
  const auto& cs = g.constraints();
  if (cs.max_cluster_size) out += "b " + std::to_string(*cs.max_cluster_size) + "\n";
  for (const auto& p : cs.cohabitation) out += "c " + std::to_string(p.a) + " " + std::to_string(p.b) + "\n";
  for (const auto& p : cs.non_cohabitation) out += "n " + std::to_string(p.a) + " " + std::to_string(p.b) + "\n";
  return out;
}

void write_graph_file(const std::filesystem::path& path, const Graph& g,
                      std::span<const std::string> comments) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << format_graph(g, comments);
  if (!out) throw std::runtime_error("error writing '" + path.string() + "'");
}

}  // namespace edgepart
