#ifndef VRHQ_SMITH_HPP
#define VRHQ_SMITH_HPP

// Smith normal form of integer matrices, returning the nonzero invariant
// factors d_1 | d_2 | ... The elimination first runs on int64 with overflow
// checks and restarts on unbounded integers if any intermediate overflows.

#include "vrhq/arith_bounds.hpp"
#include "vrhq/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

namespace vrhq {

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::int64_t>> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r, std::vector<std::int64_t>(c, 0)) {}
};

/// Side-length cap for Smith normal form; overridable via VRHQ_SNF_CAP.
inline std::size_t snf_cap_default() {
  if (const char* env = std::getenv("VRHQ_SNF_CAP")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5000;
}

namespace detail {

struct SnfOverflow {};

inline std::int64_t sub_mul(std::int64_t a, std::int64_t q, std::int64_t b) {
  std::int64_t prod = 0, out = 0;
  if (__builtin_mul_overflow(q, b, &prod) || __builtin_sub_overflow(a, prod, &out)) throw SnfOverflow{};
  return out;
}
inline BigInt sub_mul(const BigInt& a, const BigInt& q, const BigInt& b) { return a - q * b; }

inline std::int64_t abs_value(std::int64_t a) {
  if (a == INT64_MIN) throw SnfOverflow{};
  return a < 0 ? -a : a;
}
inline BigInt abs_value(const BigInt& a) { return boost::multiprecision::abs(a); }

inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_zero(const BigInt& a) { return a.is_zero(); }

template <class T>
std::vector<BigInt> smith_diagonal(std::vector<std::vector<T>> a, std::size_t rows, std::size_t cols) {
  std::vector<BigInt> diag;
  const std::size_t limit = std::min(rows, cols);
  auto swap_cols = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (auto& row : a) std::swap(row[x], row[y]);
  };

  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pivot_col = cols;
    for (std::size_t j = t; j < cols && pivot_col == cols; ++j)
      for (std::size_t i = t; i < rows; ++i)
        if (!is_zero(a[i][j])) {
          pivot_col = j;
          break;
        }
    if (pivot_col == cols) break;
    swap_cols(t, pivot_col);

    auto bring_smallest_in_column = [&] {
      std::size_t best = rows;
      for (std::size_t i = t; i < rows; ++i)
        if (!is_zero(a[i][t]) && (best == rows || abs_value(a[i][t]) < abs_value(a[best][t]))) best = i;
      std::swap(a[t], a[best]);
    };
    bring_smallest_in_column();

    for (bool settled = false; !settled;) {
      settled = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (is_zero(a[i][t])) continue;
        const T q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j)
          if (!is_zero(a[t][j])) a[i][j] = sub_mul(a[i][j], q, a[t][j]);
        if (!is_zero(a[i][t])) {
          // Remainder is smaller than the pivot; it becomes the new pivot.
          std::swap(a[t], a[i]);
          settled = false;
          break;
        }
      }
      if (!settled) continue;
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (is_zero(a[t][j])) continue;
        // Column t is zero below the pivot, so the column operation only touches row t.
        const T q = a[t][j] / a[t][t];
        a[t][j] = sub_mul(a[t][j], q, a[t][t]);
        if (!is_zero(a[t][j])) {
          swap_cols(t, j);
          settled = false;
          break;
        }
      }
    }
    diag.push_back(BigInt(abs_value(a[t][t])));
  }

  // Normalize to a divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      BigInt g = boost::multiprecision::gcd(diag[i], diag[j]);
      BigInt l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

} // namespace detail

/// Nonzero invariant factors of `m` in divisibility order.
inline std::vector<BigInt> smith_normal_form(const IntMatrix& m, std::size_t cap = snf_cap_default()) {
  if (m.rows > cap || m.cols > cap)
    throw TooLarge("matrix " + std::to_string(m.rows) + "x" + std::to_string(m.cols) +
                   " exceeds the Smith normal form cap " + std::to_string(cap));
  try {
    return detail::smith_diagonal(m.entries, m.rows, m.cols);
  } catch (const detail::SnfOverflow&) {
    std::vector<std::vector<BigInt>> wide(m.rows, std::vector<BigInt>(m.cols));
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) wide[i][j] = m.entries[i][j];
    return detail::smith_diagonal(std::move(wide), m.rows, m.cols);
  }
}

} // namespace vrhq

#endif // VRHQ_SMITH_HPP
