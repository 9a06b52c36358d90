#ifndef VRHQ_HYPERCUBE_HPP
#define VRHQ_HYPERCUBE_HPP

// Q_n under the Hamming metric, and the threshold graphs G_{n,r}
// (d_H <= r) and G^c_{n,r} (d_H >= r + 1). Vertex i is the binary string
// whose bits are those of i.

#include "vrhq/graph.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace vrhq {

struct VertexLabel {
  std::uint64_t bits = 0;
  friend auto operator<=>(const VertexLabel&, const VertexLabel&) = default;
};

inline unsigned hamming_distance(VertexLabel a, VertexLabel b) noexcept {
  return static_cast<unsigned>(std::popcount(a.bits ^ b.bits));
}

inline std::uint64_t dimension_mask(unsigned n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// Bitwise complement within n bits.
inline VertexLabel antipode(VertexLabel v, unsigned n) {
  if (n > 64 || (v.bits & ~dimension_mask(n)) != 0)
    throw InvalidVertex("label " + std::to_string(v.bits) + " is not in Q_" + std::to_string(n));
  return VertexLabel{~v.bits & dimension_mask(n)};
}

/// Binary string of length n, most significant coordinate first.
inline std::string to_binary(VertexLabel v, unsigned n) {
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i)
    if ((v.bits >> i) & 1u) s[n - 1 - i] = '1';
  return s;
}

struct HammingGraphSpec {
  unsigned n = 0;
  unsigned r = 0;
  bool complemented = false;  ///< false: d_H <= r; true: d_H >= r + 1

  bool edge_predicate(unsigned distance) const noexcept {
    if (distance == 0) return false;
    return complemented ? distance >= r + 1 : distance <= r;
  }
};

/// Hard ceiling on the dimension of an explicitly materialized Hamming graph.
inline constexpr unsigned max_materialized_dimension = 24;

inline Graph build_hamming_graph(const HammingGraphSpec& spec, std::uint64_t byte_cap = adjacency_byte_cap()) {
  if (spec.n > max_materialized_dimension)
    throw DimensionTooLarge("n = " + std::to_string(spec.n) + " exceeds the materialization ceiling " +
                            std::to_string(max_materialized_dimension));
  const std::size_t m = std::size_t{1} << spec.n;
  const std::uint64_t bytes = adjacency_bytes(m);
  if (bytes > byte_cap)
    throw DimensionTooLarge("adjacency for n = " + std::to_string(spec.n) + " needs " + std::to_string(bytes) +
                            " bytes, above the configured cap");

  // Every row is the same mask set translated by XOR.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 1; mask < m; ++mask)
    if (spec.edge_predicate(static_cast<unsigned>(std::popcount(mask)))) masks.push_back(mask);

  std::vector<DynamicBitset> rows(m, DynamicBitset(m));
  for (std::size_t v = 0; v < m; ++v)
    for (auto mask : masks) rows[v].set(v ^ mask);
  return graph_from_rows(std::move(rows));
}

} // namespace vrhq

#endif // VRHQ_HYPERCUBE_HPP
