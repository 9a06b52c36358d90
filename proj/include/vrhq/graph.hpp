#ifndef VRHQ_GRAPH_HPP
#define VRHQ_GRAPH_HPP

// Simple undirected graph with bit-packed adjacency rows. Immutable once built;
// use GraphBuilder to assemble one.

#include "vrhq/bitset.hpp"
#include "vrhq/errors.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace vrhq {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Memory cap for dense adjacency rows; overridable via VRHQ_MAX_ADJACENCY_BYTES.
inline std::uint64_t adjacency_byte_cap() {
  if (const char* env = std::getenv("VRHQ_MAX_ADJACENCY_BYTES")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::uint64_t{1} << 30;
}

inline std::uint64_t adjacency_bytes(std::size_t order) noexcept {
  return std::uint64_t{order} * ((order + 63) / 64) * 8;
}

class Graph {
public:
  Graph() = default;

  std::size_t order() const noexcept { return rows_.size(); }
  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
  const DynamicBitset& neighbors(Vertex u) const noexcept { return rows_[u]; }
  std::size_t degree(Vertex u) const noexcept { return degrees_[u]; }
  std::size_t max_degree() const noexcept { return max_degree_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_isolated_vertex() const noexcept {
    return std::find(degrees_.begin(), degrees_.end(), std::size_t{0}) != degrees_.end();
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
      for (auto v = rows_[u].find_next(u + 1); v != DynamicBitset::npos; v = rows_[u].find_next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  Graph complement() const {
    std::vector<DynamicBitset> rows;
    rows.reserve(order());
    for (Vertex u = 0; u < order(); ++u) {
      auto row = ~rows_[u];
      row.reset(u);
      rows.push_back(std::move(row));
    }
    return Graph(std::move(rows));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

private:
  friend class GraphBuilder;
  friend Graph graph_from_rows(std::vector<DynamicBitset> rows);

  explicit Graph(std::vector<DynamicBitset> rows) : rows_(std::move(rows)), degrees_(rows_.size()) {
    std::size_t sum = 0;
    for (Vertex u = 0; u < rows_.size(); ++u) {
      degrees_[u] = rows_[u].count();
      max_degree_ = std::max(max_degree_, degrees_[u]);
      sum += degrees_[u];
    }
    edge_count_ = sum / 2;
  }

  std::vector<DynamicBitset> rows_;
  std::vector<std::size_t> degrees_;
  std::size_t max_degree_ = 0;
  std::size_t edge_count_ = 0;
};

/// Adopts prebuilt rows; caller guarantees symmetry and an empty diagonal.
inline Graph graph_from_rows(std::vector<DynamicBitset> rows) { return Graph(std::move(rows)); }

class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t order) : rows_(order, DynamicBitset(order)) {}

  std::size_t order() const noexcept { return rows_.size(); }

  /// Returns false if the edge was already present. Loops are rejected.
  bool add_edge(Vertex u, Vertex v) {
    if (u == v) throw InvalidVertex("loop at vertex " + std::to_string(u));
    if (u >= order() || v >= order())
      throw InvalidVertex("edge endpoint out of range: " + std::to_string(std::max(u, v)));
    if (rows_[u].test(v)) return false;
    rows_[u].set(v);
    rows_[v].set(u);
    return true;
  }

  Graph build() && { return Graph(std::move(rows_)); }
  Graph build() const& { return Graph(rows_); }

private:
  std::vector<DynamicBitset> rows_;
};

inline Graph graph_from_edges(std::size_t order, const std::vector<Edge>& edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph complete_graph(std::size_t m) {
  GraphBuilder b(m);
  for (Vertex u = 0; u < m; ++u)
    for (Vertex v = u + 1; v < m; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t m) {
  GraphBuilder b(m);
  for (Vertex u = 0; u < m; ++u) b.add_edge(u, (u + 1) % m);
  return std::move(b).build();
}

inline Graph path_graph(std::size_t m) {
  GraphBuilder b(m);
  for (Vertex u = 0; u + 1 < m; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

/// degree -> number of vertices with that degree
inline std::map<std::size_t, std::size_t> degree_profile(const Graph& g) {
  std::map<std::size_t, std::size_t> hist;
  for (Vertex u = 0; u < g.order(); ++u) ++hist[g.degree(u)];
  return hist;
}

// DIMACS edge format: "c ..." comments, one "p edge <m> <e>" line, then
// "e <u> <v>" lines with 1-indexed endpoints.

inline Graph read_dimacs(std::string_view text, std::uint64_t byte_cap = adjacency_byte_cap()) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<GraphBuilder> builder;
  std::size_t declared_edges = 0;
  std::size_t seen_edges = 0;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "c") continue;
    if (tag == "p") {
      if (builder) throw ParseError(line_no, "duplicate problem line");
      std::string format;
      long long m = -1, e = -1;
      if (!(ls >> format >> m >> e) || format != "edge" || m < 0 || e < 0)
        throw ParseError(line_no, "expected 'p edge <vertices> <edges>'");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing tokens on problem line");
      if (adjacency_bytes(static_cast<std::size_t>(m)) > byte_cap)
        throw TooLarge("graph with " + std::to_string(m) + " vertices exceeds the adjacency memory cap");
      builder.emplace(static_cast<std::size_t>(m));
      declared_edges = static_cast<std::size_t>(e);
    } else if (tag == "e") {
      if (!builder) throw ParseError(line_no, "edge before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) throw ParseError(line_no, "expected 'e <u> <v>'");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing tokens on edge line");
      const auto m = static_cast<long long>(builder->order());
      if (u < 1 || v < 1 || u > m || v > m) throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "loop edge");
      if (!builder->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)))
        throw ParseError(line_no, "duplicate edge");
      ++seen_edges;
    } else {
      throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (!builder) throw ParseError(0, "missing problem line");
  if (seen_edges != declared_edges)
    throw InconsistentHeader("header declares " + std::to_string(declared_edges) + " edges, found " +
                             std::to_string(seen_edges));
  return std::move(*builder).build();
}

inline std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

} // namespace vrhq

#endif // VRHQ_GRAPH_HPP
