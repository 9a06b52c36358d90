#ifndef VRHQ_HOMOLOGY_HPP
#define VRHQ_HOMOLOGY_HPP

// Reduced simplicial homology of truncated complexes.
//
// Ranks come from the boundary maps d_p : C_p -> C_{p-1}, with d_0 the
// augmentation C_0 -> Z (rank 1 on a nonempty complex):
//     b~_i = f_i - rank d_i - rank d_{i+1}.
// Computing b~_d therefore needs the d+1 skeleton; a shallower complex is an
// error, never a silent zero.

#include "vrhq/complexes.hpp"
#include "vrhq/gf2.hpp"
#include "vrhq/smith.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vrhq {

struct BoundaryEntry {
  std::size_t row;
  int sign;  ///< (-1)^position of the omitted vertex
};

/// Sparse boundary matrix d_p: rows are (p-1)-simplices, columns p-simplices,
/// both in the complex's lexicographic order.
struct BoundaryMatrix {
  int p = 1;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<BoundaryEntry>> columns;  ///< entries sorted by row

  std::vector<DynamicBitset> gf2_columns() const {
    std::vector<DynamicBitset> out(cols, DynamicBitset(rows));
    for (std::size_t j = 0; j < cols; ++j)
      for (auto e : columns[j]) out[j].set(e.row);
    return out;
  }

  IntMatrix integer_matrix() const {
    IntMatrix m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j)
      for (auto e : columns[j]) m.entries[e.row][j] = e.sign;
    return m;
  }
};

inline BoundaryMatrix boundary_matrix(const SimplicialComplex& k, int p) {
  if (p < 1 || p > k.max_dim)
    throw DimensionOutOfRange("boundary dimension " + std::to_string(p) + " outside 1.." + std::to_string(k.max_dim));
  const auto& faces = k.skeleton(p - 1);
  const auto& cells = k.skeleton(p);
  BoundaryMatrix d;
  d.p = p;
  d.rows = faces.size();
  d.cols = cells.size();
  d.columns.resize(d.cols);
  Simplex facet;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto s = cells[j];
    auto& col = d.columns[j];
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      facet.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != omit) facet.push_back(s[i]);
      auto row = faces.index_of(facet);
      if (!row) throw DimensionOutOfRange("complex is not closed: missing facet of a " + std::to_string(p) + "-simplex");
      col.push_back({*row, omit % 2 == 0 ? 1 : -1});
    }
    std::sort(col.begin(), col.end(), [](auto a, auto b) { return a.row < b.row; });
  }
  return d;
}

enum class Coefficients { gf2, integers };

inline std::string to_string(Coefficients c) { return c == Coefficients::gf2 ? "gf2" : "z"; }

struct BettiProfile {
  /// b~_0 .. b~_d; over the integers these are free ranks.
  std::vector<std::size_t> reduced_betti;
  Coefficients coefficients = Coefficients::gf2;
  /// Integer pipeline only: invariant factors > 1 of the torsion of H~_i, per i.
  std::optional<std::vector<std::vector<BigInt>>> torsion;
  int truncation_dim = 0;
};

namespace detail {

inline void require_depth(const SimplicialComplex& k, int up_to) {
  if (up_to < 0) throw DimensionOutOfRange("up_to must be non-negative");
  if (k.max_dim < up_to + 1)
    throw TruncationTooShallow("homology through dimension " + std::to_string(up_to) + " needs simplices of dimension " +
                               std::to_string(up_to + 1) + ", complex is truncated at " + std::to_string(k.max_dim));
}

inline std::vector<std::size_t> reduced_from_ranks(const SimplicialComplex& k, int up_to,
                                                   const std::vector<std::size_t>& rank) {
  // rank[p] = rank of d_p for p = 0..up_to+1
  std::vector<std::size_t> betti;
  for (int i = 0; i <= up_to; ++i)
    betti.push_back(k.count(i) - rank[static_cast<std::size_t>(i)] - rank[static_cast<std::size_t>(i + 1)]);
  return betti;
}

} // namespace detail

inline BettiProfile betti_gf2(const SimplicialComplex& k, int up_to) {
  detail::require_depth(k, up_to);
  std::vector<std::size_t> rank{k.count(0) > 0 ? 1u : 0u};
  for (int p = 1; p <= up_to + 1; ++p) {
    const auto d = boundary_matrix(k, p);
    rank.push_back(gf2_rank(d.gf2_columns(), d.rows));
  }
  BettiProfile out;
  out.reduced_betti = detail::reduced_from_ranks(k, up_to, rank);
  out.coefficients = Coefficients::gf2;
  out.truncation_dim = up_to;
  return out;
}

inline BettiProfile betti_integer(const SimplicialComplex& k, int up_to, std::size_t snf_cap = snf_cap_default()) {
  detail::require_depth(k, up_to);
  std::vector<std::size_t> rank{k.count(0) > 0 ? 1u : 0u};
  std::vector<std::vector<BigInt>> torsion(static_cast<std::size_t>(up_to) + 1);
  for (int p = 1; p <= up_to + 1; ++p) {
    const auto factors = smith_normal_form(boundary_matrix(k, p).integer_matrix(), snf_cap);
    rank.push_back(factors.size());
    for (const auto& f : factors)
      if (f > 1) torsion[static_cast<std::size_t>(p - 1)].push_back(f);
  }
  BettiProfile out;
  out.reduced_betti = detail::reduced_from_ranks(k, up_to, rank);
  out.coefficients = Coefficients::integers;
  out.torsion = std::move(torsion);
  out.truncation_dim = up_to;
  return out;
}

inline BettiProfile reduced_homology(const SimplicialComplex& k, int up_to, Coefficients c) {
  return c == Coefficients::gf2 ? betti_gf2(k, up_to) : betti_integer(k, up_to);
}

/// Image of d_{p+1} over GF(2), for testing whether a p-chain is a boundary.
class BoundaryImageGf2 {
public:
  BoundaryImageGf2(const SimplicialComplex& k, int p) : k_(k), p_(p), basis_(k.count(p)) {
    if (p < 0 || p > k.max_dim) throw DimensionOutOfRange("chain dimension out of range");
    if (p + 1 <= k.max_dim)
      for (auto& col : boundary_matrix(k, p + 1).gf2_columns()) basis_.insert(std::move(col));
  }

  /// Chain given as a list of p-simplices (coefficients mod 2). Throws if a simplex is absent.
  DynamicBitset chain(const std::vector<Simplex>& simplices) const {
    DynamicBitset v(k_.count(p_));
    for (const auto& s : simplices) {
      auto idx = k_.skeleton(p_).index_of(s);
      if (!idx) throw InvalidVertex("simplex is not in the complex");
      v.flip(*idx);
    }
    return v;
  }

  bool is_boundary(const DynamicBitset& chain) const { return basis_.contains(chain); }

  /// Reduced-homology nontriviality of a p-cycle. For p = 0 a cycle must have even support.
  bool is_nontrivial_cycle(const std::vector<Simplex>& simplices) const { return !is_boundary(chain(simplices)); }

private:
  const SimplicialComplex& k_;
  int p_;
  Gf2Basis basis_;
};

} // namespace vrhq

#endif // VRHQ_HOMOLOGY_HPP
