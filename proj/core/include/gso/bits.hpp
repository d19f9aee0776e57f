#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gso {

// Fixed-capacity bitset used for vertex sets and for solver edge sets.
template <std::size_t W>
struct Bits {
  static constexpr std::size_t kWords = W;
  static constexpr std::size_t kCapacity = 64 * W;

  std::array<std::uint64_t, W> words{};

  constexpr void set(std::size_t i) noexcept { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  constexpr void reset(std::size_t i) noexcept { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  constexpr bool test(std::size_t i) const noexcept {
    return (words[i >> 6] >> (i & 63)) & 1u;
  }

  constexpr bool any() const noexcept {
    for (auto w : words)
      if (w) return true;
    return false;
  }
  constexpr bool none() const noexcept { return !any(); }

  constexpr int count() const noexcept {
    int c = 0;
    for (auto w : words) c += std::popcount(w);
    return c;
  }

  // Lowest member or -1.
  constexpr int first() const noexcept {
    for (std::size_t i = 0; i < W; ++i)
      if (words[i]) return static_cast<int>(64 * i) + std::countr_zero(words[i]);
    return -1;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t i = 0; i < W; ++i) {
      std::uint64_t x = words[i];
      while (x) {
        f(static_cast<int>(64 * i) + std::countr_zero(x));
        x &= x - 1;
      }
    }
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  constexpr bool intersects(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < W; ++i)
      if (words[i] & o.words[i]) return true;
    return false;
  }
  constexpr bool subset_of(const Bits& o) const noexcept {
    for (std::size_t i = 0; i < W; ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }

  constexpr Bits& operator|=(const Bits& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words[i] |= o.words[i];
    return *this;
  }
  constexpr Bits& operator&=(const Bits& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words[i] &= o.words[i];
    return *this;
  }
  constexpr Bits& operator^=(const Bits& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words[i] ^= o.words[i];
    return *this;
  }
  // this &= ~o
  constexpr Bits& remove(const Bits& o) noexcept {
    for (std::size_t i = 0; i < W; ++i) words[i] &= ~o.words[i];
    return *this;
  }

  friend constexpr Bits operator|(Bits a, const Bits& b) noexcept { return a |= b; }
  friend constexpr Bits operator&(Bits a, const Bits& b) noexcept { return a &= b; }
  friend constexpr Bits operator^(Bits a, const Bits& b) noexcept { return a ^= b; }
  friend constexpr Bits operator-(Bits a, const Bits& b) noexcept { return a.remove(b); }

  friend constexpr bool operator==(const Bits&, const Bits&) = default;
  friend constexpr auto operator<=>(const Bits&, const Bits&) = default;

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  static constexpr Bits single(std::size_t i) noexcept {
    Bits b;
    b.set(i);
    return b;
  }
  // {0, ..., n-1}
  static constexpr Bits prefix(std::size_t n) noexcept {
    Bits b;
    for (std::size_t i = 0; i < W; ++i) {
      if (n >= 64 * (i + 1))
        b.words[i] = ~std::uint64_t{0};
      else if (n > 64 * i)
        b.words[i] = (std::uint64_t{1} << (n - 64 * i)) - 1;
    }
    return b;
  }
};

template <std::size_t W>
struct BitsHash {
  std::size_t operator()(const Bits<W>& b) const noexcept { return b.hash(); }
};

inline constexpr int kMaxVertices = 128;
using VertexSet = Bits<2>;

VertexSet make_vertex_set(std::initializer_list<int> vs);

}  // namespace gso
