#ifndef VRHQ_BITSET_HPP
#define VRHQ_BITSET_HPP

// Runtime-sized bitset over 64-bit words. Bits beyond size() are always zero,
// so whole-word operations (count, equality, intersection) need no masking.

#include <array>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace vrhq {

class DynamicBitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  static constexpr std::size_t word_bits = 64;

  DynamicBitset() = default;
  explicit DynamicBitset(std::size_t size) : size_(size), words_(word_count(size), 0) {}

  static DynamicBitset full(std::size_t size) {
    DynamicBitset b(size);
    for (auto& w : b.words_) w = ~Word{0};
    b.trim();
    return b;
  }

  std::size_t size() const noexcept { return size_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const noexcept {
    assert(i < size_);
    return (words_[i / word_bits] >> (i % word_bits)) & 1u;
  }
  void set(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / word_bits] |= Word{1} << (i % word_bits);
  }
  void reset(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / word_bits] &= ~(Word{1} << (i % word_bits));
  }
  void flip(std::size_t i) noexcept {
    assert(i < size_);
    words_[i / word_bits] ^= Word{1} << (i % word_bits);
  }
  void clear() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  DynamicBitset& operator&=(const DynamicBitset& o) noexcept {
    assert(o.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  DynamicBitset& operator|=(const DynamicBitset& o) noexcept {
    assert(o.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynamicBitset& operator^=(const DynamicBitset& o) noexcept {
    assert(o.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  /// this &= ~o
  DynamicBitset& subtract(const DynamicBitset& o) noexcept {
    assert(o.size_ == size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  DynamicBitset operator~() const {
    DynamicBitset r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }
  friend DynamicBitset operator&(DynamicBitset a, const DynamicBitset& b) { return a &= b; }
  friend DynamicBitset operator|(DynamicBitset a, const DynamicBitset& b) { return a |= b; }
  friend DynamicBitset operator^(DynamicBitset a, const DynamicBitset& b) { return a ^= b; }
  friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

  /// |a & b| without materializing the intersection.
  friend std::size_t intersection_count(const DynamicBitset& a, const DynamicBitset& b) noexcept {
    assert(a.size_ == b.size_);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }
  /// |a & b & ~c|
  friend std::size_t intersection_count(const DynamicBitset& a, const DynamicBitset& b,
                                        const DynamicBitset& minus) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i] & ~minus.words_[i]));
    return c;
  }
  friend bool intersects(const DynamicBitset& a, const DynamicBitset& b) noexcept {
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      if (a.words_[i] & b.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const DynamicBitset& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Index of the lowest set bit at position >= from, or npos.
  std::size_t find_next(std::size_t from) const noexcept {
    if (from >= size_) return npos;
    std::size_t wi = from / word_bits;
    Word w = words_[wi] & (~Word{0} << (from % word_bits));
    while (true) {
      if (w) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t find_first() const noexcept { return find_next(0); }

  /// Index of the highest set bit, or npos.
  std::size_t find_last() const noexcept {
    for (std::size_t wi = words_.size(); wi-- > 0;)
      if (words_[wi])
        return wi * word_bits + (word_bits - 1 - static_cast<std::size_t>(std::countl_zero(words_[wi])));
    return npos;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

private:
  static std::size_t word_count(std::size_t bits) noexcept { return (bits + word_bits - 1) / word_bits; }
  void trim() noexcept {
    if (size_ % word_bits != 0 && !words_.empty())
      words_.back() &= (Word{1} << (size_ % word_bits)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Compile-time-width counterpart of DynamicBitset for small ambient sets
/// (W * 64 bits). Same member names, so search kernels can be templated on either.
template <std::size_t W>
class FixedBitset {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t npos = DynamicBitset::npos;

  FixedBitset() = default;
  explicit FixedBitset(const DynamicBitset& b) {
    assert(b.words().size() <= W);
    for (std::size_t i = 0; i < b.words().size(); ++i) words_[i] = b.words()[i];
  }

  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i) noexcept { words_[i / 64] |= Word{1} << (i % 64); }
  void reset(std::size_t i) noexcept { words_[i / 64] &= ~(Word{1} << (i % 64)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const noexcept {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const noexcept { return !any(); }

  FixedBitset& operator|=(const FixedBitset& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  FixedBitset& operator&=(const FixedBitset& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  FixedBitset& subtract(const FixedBitset& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend FixedBitset operator|(FixedBitset a, const FixedBitset& b) noexcept { return a |= b; }
  friend FixedBitset operator&(FixedBitset a, const FixedBitset& b) noexcept { return a &= b; }
  friend bool operator==(const FixedBitset&, const FixedBitset&) = default;

  friend std::size_t intersection_count(const FixedBitset& a, const FixedBitset& b) noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < W; ++i) c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
    return c;
  }
  friend bool intersects(const FixedBitset& a, const FixedBitset& b) noexcept {
    for (std::size_t i = 0; i < W; ++i)
      if (a.words_[i] & b.words_[i]) return true;
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < W; ++wi) {
      Word w = words_[wi];
      while (w) {
        f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

private:
  std::array<Word, W> words_{};
};

} // namespace vrhq

#endif // VRHQ_BITSET_HPP
