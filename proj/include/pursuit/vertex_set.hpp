#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pursuit {

using Vertex = std::uint32_t;

// Dense bitset over the vertex indices 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe, bool full = false);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  VertexSet complement() const;

  bool operator==(const VertexSet& other) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }
  std::vector<Vertex> to_vector() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  // Lowest word, for universes of at most 64 vertices.
  std::uint64_t mask64() const noexcept { return words_.empty() ? 0 : words_[0]; }
  static VertexSet from_mask64(std::size_t universe, std::uint64_t mask);

  // Byte i holds vertices 8i..8i+7 with vertex 8i+j in bit j; bytes are
  // written in increasing i as two lowercase hex digits.
  std::string to_hex() const;
  static VertexSet from_hex(std::string_view hex, std::size_t universe);

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace pursuit
