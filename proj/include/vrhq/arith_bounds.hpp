#ifndef VRHQ_ARITH_BOUNDS_HPP
#define VRHQ_ARITH_BOUNDS_HPP

// Exact evaluation of the total-domination connectivity bound for VR(Q_n; r).
//
// G^c_{n,r} (Hamming distance >= r+1) is regular of degree
//     tail_degree(n, r) = sum_{i=r+1}^{n} C(n, i),
// so the m/Delta lower bound on total domination gives
//     gamma_t(G^c_{n,r}) >= 2^n / tail_degree = 2 * alpha,   alpha = 2^{n-1} / tail_degree.
// With k the largest integer strictly below alpha, gamma_t > 2k and the
// independence complex I(G^c_{n,r}) = VR(Q_n; r) is (k-1)-connected.

#include "vrhq/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace vrhq {

using BigInt = boost::multiprecision::cpp_int;

struct BoundQuery {
  unsigned n = 1;  ///< hypercube dimension, >= 1
  unsigned r = 0;  ///< scale parameter
};

/// C(n, i); zero when i > n.
inline BigInt binomial(unsigned n, unsigned i) {
  if (i > n) return 0;
  if (i > n - i) i = n - i;
  BigInt c = 1;
  for (unsigned j = 1; j <= i; ++j) {
    c *= n - i + j;
    c /= j;  // exact: c is C(n-i+j, j) after this step
  }
  return c;
}

/// sum_{i=r+1}^{n} C(n, i), the degree of every vertex of G^c_{n,r}.
inline BigInt tail_degree(unsigned n, unsigned r) {
  BigInt sum = 0;
  if (r >= n) return sum;
  // Walk the row from i = n down, using C(n, i-1) = C(n, i) * i / (n - i + 1).
  BigInt c = 1;
  for (unsigned i = n; i > r; --i) {
    sum += c;
    c *= i;
    c /= n - i + 1;
  }
  return sum;
}

/// numerator / denominator, kept unreduced. denominator > 0.
struct ExactRatio {
  BigInt numerator;
  BigInt denominator;

  bool is_integer() const { return numerator % denominator == 0; }
  BigInt floor() const { return numerator / denominator; }
  std::string to_string() const { return numerator.str() + "/" + denominator.str(); }
  double approx() const { return numerator.convert_to<double>() / denominator.convert_to<double>(); }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
  }
};

/// alpha_{n,r} = 2^{n-1} / tail_degree(n, r). Throws DegenerateScale when r >= n.
inline ExactRatio alpha(BoundQuery q) {
  if (q.n == 0) throw DegenerateScale("hypercube dimension must be at least 1");
  if (q.r >= q.n)
    throw DegenerateScale("r >= n: G^c_{n,r} has no edges, so the m/Delta bound does not apply");
  return ExactRatio{BigInt(1) << (q.n - 1), tail_degree(q.n, q.r)};
}

struct Contractible {
  friend bool operator==(Contractible, Contractible) { return true; }
};

/// The complex is guaranteed `c`-connected; c = -1 means only "nonempty".
struct LowerBound {
  BigInt c;
  friend bool operator==(const LowerBound&, const LowerBound&) = default;
};

using ConnectivityBound = std::variant<Contractible, LowerBound>;

inline bool is_contractible(const ConnectivityBound& b) { return std::holds_alternative<Contractible>(b); }

/// Connectivity value of a LowerBound; nullopt for Contractible.
inline std::optional<BigInt> connectivity_value(const ConnectivityBound& b) {
  if (auto* lb = std::get_if<LowerBound>(&b)) return lb->c;
  return std::nullopt;
}

/// Largest integer k with k < alpha.
inline BigInt strict_floor(const ExactRatio& a) {
  BigInt f = a.floor();
  return a.is_integer() ? BigInt(f - 1) : f;
}

inline ConnectivityBound connectivity_lower_bound(BoundQuery q) {
  if (q.n == 0) throw DegenerateScale("hypercube dimension must be at least 1");
  if (q.r >= q.n) return Contractible{};
  return LowerBound{strict_floor(alpha(q)) - 1};
}

struct PublishedRow {
  unsigned n;
  unsigned r;
  std::int64_t printed;  ///< value as originally published
  BigInt computed;
  bool agrees;
};

namespace detail {
struct PublishedEntry {
  unsigned n, r;
  std::int64_t printed;
};
inline constexpr std::array<PublishedEntry, 8> published_entries{{
    {7, 5, 6},
    {8, 6, 13},
    {9, 7, 24},
    {12, 10, 156},
    {18, 15, 761},
    {18, 16, 6897},
    {20, 16, 387},
    {20, 18, 24964},
}};
} // namespace detail

/// The eight published (n, r, connectivity) rows, recomputed exactly and
/// flagged where the printed value differs from the exact evaluation.
inline std::vector<PublishedRow> published_table() {
  std::vector<PublishedRow> rows;
  rows.reserve(detail::published_entries.size());
  for (const auto& e : detail::published_entries) {
    BigInt c = *connectivity_value(connectivity_lower_bound({e.n, e.r}));
    rows.push_back({e.n, e.r, e.printed, c, c == e.printed});
  }
  return rows;
}

/// Printed value for (n, r) if it appears in the published table.
inline std::optional<std::int64_t> published_value(unsigned n, unsigned r) {
  for (const auto& e : detail::published_entries)
    if (e.n == n && e.r == r) return e.printed;
  return std::nullopt;
}

struct ScanEntry {
  unsigned n;
  unsigned r;
  BigInt connectivity;
  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

/// Pairs 2 <= n <= n_max, n >= r + 2, whose bound c satisfies c >= r + 1.
/// Such a c forces H~_{r+1}(VR(Q_n; r)) = 0, which contradicts the conjecture
/// that H~_i is nonzero exactly at i = r + 1. Sorted by (n, r).
inline std::vector<ScanEntry> counterexample_scan(unsigned n_max) {
  std::vector<ScanEntry> out;
  for (unsigned n = 2; n <= n_max; ++n)
    for (unsigned r = 0; r + 2 <= n; ++r) {
      BigInt c = *connectivity_value(connectivity_lower_bound({n, r}));
      if (c >= BigInt(r) + 1) out.push_back({n, r, c});
    }
  return out;
}

/// Pairs (n >= r + 2, r >= 1, n <= n_max) whose bound c exceeds 2^r - 2.
/// Since H~_{2^r - 1}(VR(Q_n; r)) is known to be nonzero, any such pair would
/// be a contradiction; the list is expected to be empty.
inline std::vector<ScanEntry> top_class_violations(unsigned n_max) {
  std::vector<ScanEntry> out;
  for (unsigned n = 3; n <= n_max; ++n)
    for (unsigned r = 1; r + 2 <= n; ++r) {
      BigInt c = *connectivity_value(connectivity_lower_bound({n, r}));
      if (c > (BigInt(1) << r) - 2) out.push_back({n, r, c});
    }
  return out;
}

} // namespace vrhq

#endif // VRHQ_ARITH_BOUNDS_HPP
