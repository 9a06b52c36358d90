#ifndef VRHQ_COMPLEXES_HPP
#define VRHQ_COMPLEXES_HPP

// Clique complexes truncated at a requested dimension: VR(Q_n; r) is the
// clique complex of G_{n,r}, and the independence complex I(G) is the clique
// complex of the complement of G.

#include "vrhq/errors.hpp"
#include "vrhq/graph.hpp"
#include "vrhq/hypercube.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace vrhq {

using SimplexVertex = std::uint32_t;
/// Strictly increasing vertex list; dimension = size() - 1.
using Simplex = std::vector<SimplexVertex>;

/// All simplices of one dimension, stored flat in lexicographic order.
class Skeleton {
public:
  explicit Skeleton(int dim = 0) : dim_(dim) {}

  int dim() const noexcept { return dim_; }
  std::size_t width() const noexcept { return static_cast<std::size_t>(dim_ + 1); }
  std::size_t size() const noexcept { return flat_.size() / width(); }
  bool empty() const noexcept { return flat_.empty(); }

  std::span<const SimplexVertex> operator[](std::size_t i) const noexcept {
    return {flat_.data() + i * width(), width()};
  }

  void push_back(std::span<const SimplexVertex> s) { flat_.insert(flat_.end(), s.begin(), s.end()); }

  /// Position of `s` in the skeleton, or nullopt. Requires lexicographic order.
  std::optional<std::size_t> index_of(std::span<const SimplexVertex> s) const noexcept {
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
      const auto mid = lo + (hi - lo) / 2;
      auto cur = (*this)[mid];
      if (std::lexicographical_compare(cur.begin(), cur.end(), s.begin(), s.end()))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo < size() && std::ranges::equal((*this)[lo], s)) return lo;
    return std::nullopt;
  }

  void sort_lexicographic() {
    std::vector<Simplex> rows;
    rows.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) rows.emplace_back((*this)[i].begin(), (*this)[i].end());
    std::sort(rows.begin(), rows.end());
    flat_.clear();
    for (const auto& r : rows) push_back(r);
  }

private:
  int dim_;
  std::vector<SimplexVertex> flat_;
};

struct SimplicialComplex {
  std::size_t n_vertices = 0;
  int max_dim = 0;               ///< truncation dimension requested at construction
  std::vector<Skeleton> by_dim;  ///< by_dim[d] holds the d-simplices, d = 0..max_dim

  const Skeleton& skeleton(int d) const { return by_dim.at(static_cast<std::size_t>(d)); }
  std::size_t count(int d) const {
    return d < 0 || d > max_dim ? 0 : by_dim[static_cast<std::size_t>(d)].size();
  }
  std::size_t total_simplices() const {
    std::size_t t = 0;
    for (const auto& s : by_dim) t += s.size();
    return t;
  }
};

/// Default cap on the number of simplices a construction may produce;
/// overridable via VRHQ_MAX_SIMPLICES.
inline std::uint64_t max_simplices_default() {
  if (const char* env = std::getenv("VRHQ_MAX_SIMPLICES")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 100'000'000;
}

namespace detail {

class CliqueEnumerator {
public:
  CliqueEnumerator(const Graph& g, SimplicialComplex& out, std::uint64_t cap) : g_(g), out_(out), cap_(cap) {}

  void run() {
    DynamicBitset all = DynamicBitset::full(g_.order());
    extend(all);
  }

private:
  void extend(const DynamicBitset& candidates) {
    DynamicBitset rest = candidates;
    for (auto v = rest.find_first(); v != DynamicBitset::npos; v = rest.find_next(v + 1)) {
      rest.reset(v);
      current_.push_back(static_cast<SimplexVertex>(v));
      if (++produced_ > cap_)
        throw TooLarge("complex exceeds the simplex cap of " + std::to_string(cap_));
      out_.by_dim[current_.size() - 1].push_back(current_);
      if (static_cast<int>(current_.size()) <= out_.max_dim) {
        DynamicBitset next = rest & g_.neighbors(v);
        if (next.any()) extend(next);
      }
      current_.pop_back();
    }
  }

  const Graph& g_;
  SimplicialComplex& out_;
  std::uint64_t cap_;
  std::uint64_t produced_ = 0;
  Simplex current_;
};

} // namespace detail

/// Clique complex of `g` up to dimension `max_dim`; simplices in lexicographic order.
inline SimplicialComplex clique_complex(const Graph& g, int max_dim, std::uint64_t cap = max_simplices_default()) {
  if (max_dim < 0) throw DimensionOutOfRange("max_dim must be non-negative");
  SimplicialComplex k;
  k.n_vertices = g.order();
  k.max_dim = max_dim;
  for (int d = 0; d <= max_dim; ++d) k.by_dim.emplace_back(d);
  detail::CliqueEnumerator(g, k, cap).run();
  return k;
}

/// Maximum hypercube dimension for full enumeration once simplices of dimension >= 3 are requested.
inline constexpr unsigned max_rips_dimension = 16;

inline SimplicialComplex vietoris_rips(unsigned n, unsigned r, int max_dim,
                                       std::uint64_t cap = max_simplices_default()) {
  if (max_dim >= 3 && n > max_rips_dimension)
    throw TooLarge("VR(Q_" + std::to_string(n) + ") beyond dimension 2 exceeds the enumeration ceiling");
  return clique_complex(build_hamming_graph({n, r, false}), max_dim, cap);
}

/// Clique complex of the complement: faces are the independent sets of `g`.
inline SimplicialComplex independence_complex(const Graph& g, int max_dim,
                                              std::uint64_t cap = max_simplices_default()) {
  return clique_complex(g.complement(), max_dim, cap);
}

inline std::vector<std::size_t> f_vector(const SimplicialComplex& k) {
  std::vector<std::size_t> f;
  for (const auto& s : k.by_dim) f.push_back(s.size());
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline std::int64_t euler_characteristic(const SimplicialComplex& k) {
  std::int64_t chi = 0;
  for (int d = 0; d <= k.max_dim; ++d) {
    const auto c = static_cast<std::int64_t>(k.count(d));
    chi += (d % 2 == 0) ? c : -c;
  }
  return chi;
}

/// Every facet of every listed simplex is listed.
inline bool is_closed(const SimplicialComplex& k) {
  Simplex facet;
  for (int d = 1; d <= k.max_dim; ++d) {
    const auto& sk = k.skeleton(d);
    for (std::size_t i = 0; i < sk.size(); ++i) {
      auto s = sk[i];
      for (std::size_t omit = 0; omit < s.size(); ++omit) {
        facet.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != omit) facet.push_back(s[j]);
        if (!k.skeleton(d - 1).index_of(facet)) return false;
      }
    }
  }
  return true;
}

// Complex file format: "dim <max_dim> vertices <n_vertices>", then one simplex
// per line (0-indexed, increasing), grouped by ascending dimension.

inline std::string write_complex(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "dim " << k.max_dim << " vertices " << k.n_vertices << '\n';
  for (const auto& sk : k.by_dim)
    for (std::size_t i = 0; i < sk.size(); ++i) {
      auto s = sk[i];
      for (std::size_t j = 0; j < s.size(); ++j) out << (j ? " " : "") << s[j];
      out << '\n';
    }
  return out.str();
}

inline SimplicialComplex read_complex(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  SimplicialComplex k;
  bool have_header = false;
  int last_dim = -1;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    if (!have_header) {
      std::string dim_tag, vert_tag;
      long long max_dim = -1, n = -1;
      if (!(ls >> dim_tag >> max_dim >> vert_tag >> n) || dim_tag != "dim" || vert_tag != "vertices" ||
          max_dim < 0 || n < 0)
        throw ParseError(line_no, "expected header 'dim <max_dim> vertices <n_vertices>'");
      std::string rest;
      if (ls >> rest) throw ParseError(line_no, "trailing tokens in header");
      k.n_vertices = static_cast<std::size_t>(n);
      k.max_dim = static_cast<int>(max_dim);
      for (int d = 0; d <= k.max_dim; ++d) k.by_dim.emplace_back(d);
      have_header = true;
      continue;
    }
    Simplex s;
    std::string tok;
    while (ls >> tok) {
      std::size_t pos = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || tok.front() == '-') throw ParseError(line_no, "not a vertex index: '" + tok + "'");
      if (v >= k.n_vertices) throw ParseError(line_no, "vertex " + tok + " out of range");
      if (!s.empty() && v <= s.back()) throw ParseError(line_no, "simplex vertices must be strictly increasing");
      s.push_back(static_cast<SimplexVertex>(v));
    }
    if (s.empty()) continue;
    const int d = static_cast<int>(s.size()) - 1;
    if (d > k.max_dim) throw ParseError(line_no, "simplex dimension exceeds declared max_dim");
    if (d < last_dim) throw ParseError(line_no, "simplices must be grouped by ascending dimension");
    last_dim = d;
    k.by_dim[static_cast<std::size_t>(d)].push_back(s);
  }
  if (!have_header) throw ParseError(0, "missing header");
  for (auto& sk : k.by_dim) {
    sk.sort_lexicographic();
    for (std::size_t i = 1; i < sk.size(); ++i)
      if (std::ranges::equal(sk[i - 1], sk[i])) throw ParseError(0, "duplicate simplex");
  }
  if (!is_closed(k)) throw ParseError(0, "complex is not closed under taking faces");
  return k;
}

// Cross-polytope witnesses. A vertex set C in Q_n spans the boundary of a
// cross-polytope in VR(Q_n; r) when it splits into pairs {v_i, w_i} with
// d_H(v_i, w_i) >= r + 1 while every other pair of C is within distance r.

enum class PatternIssue { no_far_partner, extra_far_partner };

struct PatternViolation {
  VertexLabel a;
  VertexLabel b;
  unsigned distance;
  PatternIssue issue;
};

struct WitnessReport {
  /// Far pairs (distance >= r + 1) inside the set form a matching in G^c_{n,r}.
  bool is_matching_complement = false;
  /// The far pairs form a perfect matching of the set (m >= 1 pairs).
  bool is_cross_polytope_boundary = false;
  /// Unset when n is beyond the materialization ceiling.
  std::optional<bool> is_total_dominating_in_complement;
  std::vector<std::pair<VertexLabel, VertexLabel>> pairs;  ///< recovered pairing, when perfect
  /// For an unpaired vertex: its farthest vertex in the set. For a vertex with
  /// several far partners: each partner after the first.
  std::vector<PatternViolation> missing_pairs;
};

/// Does `set` total-dominate G^c_{n,r}: every u in Q_n at distance >= r + 1 from some member.
inline bool dominates_complement(unsigned n, unsigned r, std::span<const VertexLabel> set) {
  if (n > max_materialized_dimension)
    throw DimensionTooLarge("domination check is limited to n <= " + std::to_string(max_materialized_dimension));
  if (r >= n) return false;
  const std::uint64_t m = std::uint64_t{1} << n;
  for (std::uint64_t u = 0; u < m; ++u) {
    bool hit = false;
    for (auto s : set)
      if (hamming_distance(VertexLabel{u}, s) >= r + 1) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

inline WitnessReport cross_polytope_witness_check(unsigned n, unsigned r, std::span<const VertexLabel> vertices) {
  if (n == 0 || n > 64) throw InvalidVertex("hypercube dimension must be in 1..64");
  if (vertices.size() % 2 != 0) throw OddCount("witness needs an even number of vertices, got " +
                                               std::to_string(vertices.size()));
  std::vector<VertexLabel> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if ((sorted[i].bits & ~dimension_mask(n)) != 0)
      throw InvalidVertex("label " + std::to_string(sorted[i].bits) + " is not in Q_" + std::to_string(n));
    if (i && sorted[i] == sorted[i - 1]) throw DuplicateVertex("vertex " + std::to_string(sorted[i].bits) + " repeated");
  }

  WitnessReport rep;
  bool matching = true;
  bool perfect = !vertices.empty();
  std::vector<int> partner(vertices.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::size_t far_count = 0;
    std::size_t farthest = i;
    unsigned farthest_d = 0;
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (j == i) continue;
      const auto d = hamming_distance(vertices[i], vertices[j]);
      if (d > farthest_d || farthest == i) {
        farthest_d = d;
        farthest = j;
      }
      if (d >= r + 1) {
        if (++far_count == 1) {
          partner[i] = static_cast<int>(j);
        } else {
          if (i < j) rep.missing_pairs.push_back({vertices[i], vertices[j], d, PatternIssue::extra_far_partner});
        }
      }
    }
    if (far_count > 1) matching = false;
    if (far_count == 0) {
      perfect = false;
      if (farthest != i)
        rep.missing_pairs.push_back({vertices[i], vertices[farthest], farthest_d, PatternIssue::no_far_partner});
    }
  }
  rep.is_matching_complement = matching;
  rep.is_cross_polytope_boundary = matching && perfect;
  if (rep.is_cross_polytope_boundary)
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (static_cast<int>(i) < partner[i])
        rep.pairs.emplace_back(vertices[i], vertices[static_cast<std::size_t>(partner[i])]);
  if (n <= max_materialized_dimension) rep.is_total_dominating_in_complement = dominates_complement(n, r, vertices);
  return rep;
}

/// Facets of the cross-polytope boundary on the given pairs: one vertex from
/// each pair, as sorted simplices of dimension pairs.size() - 1.
inline std::vector<Simplex> cross_polytope_facets(const std::vector<std::pair<SimplexVertex, SimplexVertex>>& pairs) {
  std::vector<Simplex> facets;
  const std::size_t m = pairs.size();
  if (m == 0 || m >= 32) return facets;
  for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << m); ++choice) {
    Simplex s;
    for (std::size_t i = 0; i < m; ++i) s.push_back((choice >> i) & 1u ? pairs[i].second : pairs[i].first);
    std::sort(s.begin(), s.end());
    facets.push_back(std::move(s));
  }
  std::sort(facets.begin(), facets.end());
  return facets;
}

} // namespace vrhq

#endif // VRHQ_COMPLEXES_HPP
