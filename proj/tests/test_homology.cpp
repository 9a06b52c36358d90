#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vrhq/arith_bounds.hpp"
#include "vrhq/domination.hpp"
#include "vrhq/homology.hpp"

#include <set>

using vrhq::BigInt;
using vrhq::Coefficients;
using vrhq::SimplicialComplex;

namespace {

std::vector<std::vector<std::uint32_t>> as_masks(const SimplicialComplex& k) {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(k.max_dim) + 1);
  for (int d = 0; d <= k.max_dim; ++d) {
    const auto& sk = k.skeleton(d);
    for (std::size_t i = 0; i < sk.size(); ++i) {
      std::uint32_t mask = 0;
      for (auto v : sk[i]) mask |= 1u << v;
      out[static_cast<std::size_t>(d)].push_back(mask);
    }
  }
  return out;
}

/// Downward closure of the given facets, as a complex truncated at max_dim.
SimplicialComplex from_facets(std::size_t n_vertices, int max_dim, const std::vector<vrhq::Simplex>& facets) {
  std::set<vrhq::Simplex> faces;
  for (const auto& f : facets)
    for (std::uint32_t sub = 1; sub < (1u << f.size()); ++sub) {
      vrhq::Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((sub >> i) & 1u) s.push_back(f[i]);
      faces.insert(s);
    }
  std::vector<vrhq::Simplex> ordered(faces.begin(), faces.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](auto& a, auto& b) { return a.size() < b.size(); });
  std::string text = "dim " + std::to_string(max_dim) + " vertices " + std::to_string(n_vertices) + "\n";
  for (const auto& s : ordered) {
    for (std::size_t i = 0; i < s.size(); ++i) text += (i ? " " : "") + std::to_string(s[i]);
    text += "\n";
  }
  return vrhq::read_complex(text);
}

/// Six-vertex triangulation of the real projective plane.
SimplicialComplex projective_plane(int max_dim) {
  return from_facets(6, max_dim,
                     {{0, 1, 3}, {0, 1, 5}, {0, 2, 4}, {0, 2, 5}, {0, 3, 4},
                      {1, 2, 3}, {1, 2, 4}, {1, 4, 5}, {2, 3, 5}, {3, 4, 5}});
}

using Vec = std::vector<std::size_t>;

std::size_t even_factors(const std::vector<BigInt>& factors) {
  return static_cast<std::size_t>(std::ranges::count_if(factors, [](const BigInt& f) { return f % 2 == 0; }));
}

void check_chain_identity(const SimplicialComplex& k) {
  for (int p = 1; p + 1 <= k.max_dim; ++p) {
    const auto lower = vrhq::boundary_matrix(k, p);
    const auto upper = vrhq::boundary_matrix(k, p + 1);
    for (const auto& col : upper.columns) {
      std::map<std::size_t, int> acc;
      for (auto e : col)
        for (auto f : lower.columns[e.row]) acc[f.row] += e.sign * f.sign;
      for (auto [row, v] : acc) CHECK(v == 0);
    }
    // GF(2) as well: every entry of the product is even.
    const auto lc = lower.gf2_columns();
    for (const auto& col : upper.columns) {
      vrhq::DynamicBitset sum(lower.rows);
      for (auto e : col) sum ^= lc[e.row];
      CHECK(sum.none());
    }
  }
}

} // namespace

TEST_CASE("boundary matrix shapes", "[homology]") {
  auto square = vrhq::vietoris_rips(2, 1, 1);
  auto d1 = vrhq::boundary_matrix(square, 1);
  CHECK(d1.rows == 4);
  CHECK(d1.cols == 4);
  for (const auto& c : d1.columns) {
    REQUIRE(c.size() == 2);
    CHECK(c[0].sign + c[1].sign == 0);
  }

  auto simplex = from_facets(4, 3, {{0, 1, 2, 3}});
  auto d2 = vrhq::boundary_matrix(simplex, 2);
  CHECK(d2.rows == 6);
  CHECK(d2.cols == 4);
  for (const auto& c : d2.columns) CHECK(c.size() == 3);
  check_chain_identity(simplex);

  auto octa = vrhq::vietoris_rips(3, 2, 3);
  auto d3 = vrhq::boundary_matrix(octa, 3);
  CHECK(d3.rows == 32);
  CHECK(d3.cols == 16);

  CHECK_THROWS_AS(vrhq::boundary_matrix(octa, 0), vrhq::DimensionOutOfRange);
  CHECK_THROWS_AS(vrhq::boundary_matrix(octa, 4), vrhq::DimensionOutOfRange);
}

TEST_CASE("signs alternate by omitted position", "[homology]") {
  auto tri = from_facets(3, 2, {{0, 1, 2}});
  auto d2 = vrhq::boundary_matrix(tri, 2);
  REQUIRE(d2.cols == 1);
  // faces in order {0,1}, {0,2}, {1,2}: omit 2 -> +, omit 1 -> -, omit 0 -> +
  const auto& c = d2.columns[0];
  REQUIRE(c.size() == 3);
  CHECK(c[0].sign == 1);
  CHECK(c[1].sign == -1);
  CHECK(c[2].sign == 1);
}

TEST_CASE("chain identity on constructed complexes", "[homology][property]") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned r = 0; r <= n; ++r) check_chain_identity(vrhq::vietoris_rips(n, r, 4));
  check_chain_identity(projective_plane(2));
}

TEST_CASE("Betti fixtures over GF(2)", "[homology]") {
  CHECK(vrhq::betti_gf2(vrhq::vietoris_rips(2, 1, 2), 1).reduced_betti == Vec{0, 1});
  CHECK(vrhq::betti_gf2(vrhq::vietoris_rips(3, 1, 2), 1).reduced_betti == Vec{0, 5});
  CHECK(vrhq::betti_gf2(vrhq::vietoris_rips(3, 2, 4), 3).reduced_betti == Vec{0, 0, 0, 1});
  CHECK(vrhq::betti_gf2(vrhq::vietoris_rips(3, 3, 4), 3).reduced_betti == Vec{0, 0, 0, 0});
}

TEST_CASE("Betti fixtures agree with the subset-enumeration oracle", "[homology][property]") {
  // Frozen oracle outputs; the loop below re-derives them.
  CHECK(oracle::reduced_betti_gf2(oracle::rips_by_subsets(2, 1, 2), 1) == Vec{0, 1});
  CHECK(oracle::reduced_betti_gf2(oracle::rips_by_subsets(3, 1, 2), 1) == Vec{0, 5});
  CHECK(oracle::reduced_betti_gf2(oracle::rips_by_subsets(3, 2, 4), 3) == Vec{0, 0, 0, 1});
  CHECK(oracle::reduced_betti_gf2(oracle::rips_by_subsets(3, 3, 4), 3) == Vec{0, 0, 0, 0});

  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      const int up_to = 3;
      const auto lib = vrhq::betti_gf2(vrhq::vietoris_rips(n, r, up_to + 1), up_to).reduced_betti;
      CHECK(lib == oracle::reduced_betti_gf2(oracle::rips_by_subsets(n, r, up_to + 1), up_to));
    }
}

TEST_CASE("VR(Q_4;3) is an 8-cross-polytope boundary", "[homology]") {
  auto k = vrhq::vietoris_rips(4, 3, 8);
  const Vec expect{0, 0, 0, 0, 0, 0, 0, 1};
  CHECK(vrhq::betti_gf2(k, 7).reduced_betti == expect);
  CHECK(oracle::reduced_betti_gf2(oracle::rips_by_subsets(4, 3, 8), 7) == expect);
  CHECK(*vrhq::connectivity_value(vrhq::connectivity_lower_bound({4, 3})) == 6);
}

TEST_CASE("integer homology", "[homology]") {
  auto circle = vrhq::betti_integer(vrhq::vietoris_rips(2, 1, 2), 1);
  CHECK(circle.reduced_betti == Vec{0, 1});
  CHECK(circle.coefficients == Coefficients::integers);
  REQUIRE(circle.torsion);
  for (const auto& t : *circle.torsion) CHECK(t.empty());

  auto sphere = vrhq::reduced_homology(vrhq::vietoris_rips(3, 2, 4), 3, Coefficients::integers);
  CHECK(sphere.reduced_betti == Vec{0, 0, 0, 1});

  auto rp2 = projective_plane(3);
  auto z = vrhq::betti_integer(rp2, 2);
  CHECK(z.reduced_betti == Vec{0, 0, 0});
  REQUIRE(z.torsion);
  CHECK((*z.torsion)[0].empty());
  CHECK((*z.torsion)[1] == std::vector<BigInt>{2});
  CHECK((*z.torsion)[2].empty());
  auto f2 = vrhq::betti_gf2(rp2, 2);
  CHECK(f2.reduced_betti == Vec{0, 1, 1});
  CHECK(oracle::reduced_betti_gf2(as_masks(rp2), 2) == Vec{0, 1, 1});
}

TEST_CASE("coefficient coherence", "[homology][property]") {
  std::vector<std::pair<SimplicialComplex, int>> fixtures;
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned r = 0; r <= n; ++r) fixtures.emplace_back(vrhq::vietoris_rips(n, r, 4), 3);
  fixtures.emplace_back(projective_plane(3), 2);
  for (const auto& [k, up_to] : fixtures) {
    const auto f2 = vrhq::betti_gf2(k, up_to).reduced_betti;
    const auto z = vrhq::betti_integer(k, up_to);
    for (int i = 0; i <= up_to; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      std::size_t expect = z.reduced_betti[ui] + even_factors((*z.torsion)[ui]);
      if (i > 0) expect += even_factors((*z.torsion)[ui - 1]);
      CHECK(f2[ui] == expect);
    }
  }
}

TEST_CASE("Euler characteristic matches Betti numbers", "[homology][property]") {
  for (unsigned n = 1; n <= 3; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      // Built one past the true dimension so every Betti number is available.
      auto full = vrhq::vietoris_rips(n, r, 8);
      int true_dim = 0;
      while (true_dim + 1 <= full.max_dim && full.count(true_dim + 1) > 0) ++true_dim;
      REQUIRE(true_dim < full.max_dim);
      const auto b = vrhq::betti_gf2(full, true_dim).reduced_betti;
      std::int64_t alt = 1;  // unreduced b_0 = reduced b_0 + 1
      for (int i = 0; i <= true_dim; ++i)
        alt += (i % 2 ? -1 : 1) * static_cast<std::int64_t>(b[static_cast<std::size_t>(i)]);
      CHECK(alt == vrhq::euler_characteristic(full));
    }
}

TEST_CASE("full simplex has vanishing reduced homology", "[homology]") {
  for (std::size_t v = 1; v <= 6; ++v) {
    vrhq::Simplex all;
    for (std::size_t i = 0; i < v; ++i) all.push_back(static_cast<vrhq::SimplexVertex>(i));
    auto k = from_facets(v, static_cast<int>(v), {all});
    for (auto b : vrhq::betti_gf2(k, static_cast<int>(v) - 1).reduced_betti) CHECK(b == 0);
    for (auto b : vrhq::betti_integer(k, static_cast<int>(v) - 1).reduced_betti) CHECK(b == 0);
  }
}

TEST_CASE("truncation contract", "[homology]") {
  auto k = vrhq::vietoris_rips(3, 2, 3);
  CHECK_THROWS_AS(vrhq::betti_gf2(k, 3), vrhq::TruncationTooShallow);
  CHECK_THROWS_AS(vrhq::betti_integer(k, 3), vrhq::TruncationTooShallow);
  CHECK_NOTHROW(vrhq::betti_gf2(k, 2));
  CHECK_THROWS_AS(vrhq::betti_gf2(k, -1), vrhq::DimensionOutOfRange);
}

TEST_CASE("Smith normal form", "[homology][snf]") {
  CHECK(vrhq::smith_normal_form(vrhq::IntMatrix(3, 4)).empty());

  vrhq::IntMatrix id(3, 3);
  for (std::size_t i = 0; i < 3; ++i) id.entries[i][i] = 1;
  CHECK(vrhq::smith_normal_form(id) == std::vector<BigInt>{1, 1, 1});

  vrhq::IntMatrix d(2, 2);
  d.entries = {{2, 0}, {0, 3}};
  CHECK(vrhq::smith_normal_form(d) == std::vector<BigInt>{1, 6});

  vrhq::IntMatrix e(3, 3);
  e.entries = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  CHECK(vrhq::smith_normal_form(e) == std::vector<BigInt>{2, 6, 12});

  // Entries that overflow 64-bit pivots fall back to exact big integers.
  vrhq::IntMatrix big(2, 2);
  big.entries = {{std::int64_t{1} << 62, 3}, {5, std::int64_t{1} << 62}};
  const auto factors = vrhq::smith_normal_form(big);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == 1);
  CHECK(factors[1] == (BigInt(1) << 124) - 15);

  CHECK_THROWS_AS(vrhq::smith_normal_form(vrhq::IntMatrix(11, 2), 10), vrhq::TooLarge);
}

TEST_CASE("cross-polytope cycle is nontrivial exactly when it does not bound", "[homology]") {
  const auto facets = vrhq::cross_polytope_facets({{0, 7}, {1, 6}, {2, 5}, {3, 4}});
  auto octa = vrhq::vietoris_rips(3, 2, 4);
  CHECK(vrhq::BoundaryImageGf2(octa, 3).is_nontrivial_cycle(facets));
  auto simplex = vrhq::vietoris_rips(3, 3, 4);
  CHECK_FALSE(vrhq::BoundaryImageGf2(simplex, 3).is_nontrivial_cycle(facets));

  auto square = vrhq::vietoris_rips(2, 1, 2);
  CHECK(vrhq::BoundaryImageGf2(square, 1).is_nontrivial_cycle(vrhq::cross_polytope_facets({{0, 3}, {1, 2}})));
  CHECK_THROWS_AS(vrhq::BoundaryImageGf2(square, 1).chain({{0, 3}}), vrhq::InvalidVertex);
}

TEST_CASE("homology vanishes below the connectivity bound", "[homology][property]") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned r = 0; r < n; ++r) {
      const auto c = vrhq::connectivity_value(vrhq::connectivity_lower_bound({n, r}));
      REQUIRE(c);
      if (*c < 0) continue;
      const int up_to = static_cast<int>(*c);
      const auto b = vrhq::betti_gf2(vrhq::vietoris_rips(n, r, up_to + 1), up_to).reduced_betti;
      for (auto x : b) CHECK(x == 0);
    }
}

TEST_CASE("homology vanishes below the exact domination threshold", "[homology][property]") {
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned r = 0; r < n; ++r) {
      const auto g = vrhq::build_hamming_graph({n, r, true});
      const auto gamma = *vrhq::exact_gamma_t(g, {.vertex_transitive = true}).exact;
      // gamma_t > 2k gives (k-1)-connected; largest such k is floor((gamma - 1) / 2).
      const int top = static_cast<int>((gamma - 1) / 2) - 1;
      if (top < 0) continue;
      const auto b = vrhq::betti_gf2(vrhq::vietoris_rips(n, r, top + 1), top).reduced_betti;
      for (auto x : b) CHECK(x == 0);
    }
}
