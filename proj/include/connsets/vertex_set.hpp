#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <string>
#include <vector>

namespace connsets {

using Vertex = int;

inline constexpr int kMaxVertices = 64;

// A subset of {0..63}, one bit per vertex. Which graph the set belongs to is
// the caller's business; graph operations reject sets with bits at or above n.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
  // {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }
  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  // Lowest member; undefined on an empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }

  constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  constexpr auto operator<=>(const VertexSet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

  std::vector<Vertex> to_vector() const;
  // "{0,2,5}"
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace connsets
