#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace reflekt {

/// Upper bound on the carrier of any finite poset or space.
inline constexpr std::size_t kMaxCarrier = 256;

/// A subset of a finite carrier {0, ..., n-1}, stored as a fixed bit-vector.
///
/// The carrier size is not stored; callers pair a Subset with the poset or
/// space it belongs to. Ordering is the lexicographic order of bit-strings
/// read from index 0 upwards, which is the canonical order for every emitted
/// family.
class Subset {
 public:
  static constexpr std::size_t kWords = kMaxCarrier / 64;

  constexpr Subset() = default;
  Subset(std::initializer_list<std::size_t> items) {
    for (auto i : items) insert(i);
  }

  static Subset full(std::size_t n) {
    Subset s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < 64 ? n : 64;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }
  static Subset single(std::size_t i) {
    Subset s;
    s.insert(i);
    return s;
  }
  static Subset from_mask(std::uint64_t mask) {
    Subset s;
    s.words_[0] = mask;
    return s;
  }

  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool is_subset_of(const Subset& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  bool intersects(const Subset& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  /// Lowest member, or kMaxCarrier when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kMaxCarrier;
  }
  std::uint64_t low_word() const { return words_[0]; }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  Subset& operator|=(const Subset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Subset& operator&=(const Subset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Subset& operator-=(const Subset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }
  friend bool operator==(const Subset&, const Subset&) = default;

  /// Bit-string order: at the lowest differing index the smaller set lacks it.
  friend bool operator<(const Subset& a, const Subset& b) {
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff != 0) return (b.words_[w] >> std::countr_zero(diff)) & 1U;
    }
    return false;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const { return s.hash(); }
};

}  // namespace reflekt
