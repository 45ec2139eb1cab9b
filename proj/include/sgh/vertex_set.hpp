#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace sgh {

using Vertex = std::uint32_t;

// Fixed-universe bitset over vertex ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  bool contains(Vertex v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void toggle(Vertex v) noexcept { words_[v >> 6] ^= std::uint64_t{1} << (v & 63); }
  void clear() noexcept;

  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator^=(const VertexSet& other) noexcept;
  // Set difference.
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) noexcept { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  // Complement within the universe.
  VertexSet complement() const;

  std::optional<Vertex> first() const noexcept;
  std::vector<Vertex> to_vector() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

 private:
  void trim() noexcept;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace sgh
