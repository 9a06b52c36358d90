#ifndef VRHQ_GF2_HPP
#define VRHQ_GF2_HPP

#include "vrhq/bitset.hpp"

#include <optional>
#include <vector>

namespace vrhq {

/// Column space over GF(2) kept in echelon form, keyed by each vector's
/// highest set bit.
class Gf2Basis {
public:
  explicit Gf2Basis(std::size_t dimension) : dimension_(dimension), by_pivot_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t rank() const noexcept { return rank_; }

  /// Adds `v`; returns false when it was already in the span.
  bool insert(DynamicBitset v) {
    reduce(v);
    if (v.none()) return false;
    by_pivot_[v.find_last()] = std::move(v);
    ++rank_;
    return true;
  }

  bool contains(DynamicBitset v) const {
    reduce(v);
    return v.none();
  }

private:
  void reduce(DynamicBitset& v) const {
    for (auto p = v.find_last(); p != DynamicBitset::npos; p = v.find_last()) {
      if (!by_pivot_[p]) return;
      v ^= *by_pivot_[p];
    }
  }

  std::size_t dimension_;
  std::vector<std::optional<DynamicBitset>> by_pivot_;
  std::size_t rank_ = 0;
};

inline std::size_t gf2_rank(const std::vector<DynamicBitset>& columns, std::size_t rows) {
  Gf2Basis basis(rows);
  for (const auto& c : columns) basis.insert(c);
  return basis.rank();
}

} // namespace vrhq

#endif // VRHQ_GF2_HPP
