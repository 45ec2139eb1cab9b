#include "sgh/vertex_set.hpp"

#include <algorithm>

namespace sgh {

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator^=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::optional<Vertex> VertexSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    }
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::trim() noexcept {
  const std::size_t tail = universe_ & 63;
  if (tail != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << tail) - 1;
}

}  // namespace sgh
