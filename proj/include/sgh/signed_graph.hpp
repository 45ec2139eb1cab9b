#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sgh/vertex_set.hpp"

namespace sgh {

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}

constexpr Sign flip(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

// Sign contributed by a switch bit: re-signed vertices flip incident edges.
constexpr Sign switch_factor(bool switched) noexcept {
  return switched ? Sign::Negative : Sign::Positive;
}

constexpr char sign_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

struct SignedEdge {
  Vertex u;
  Vertex v;
  Sign sign;

  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

// Simple signed graph on vertices 0..n-1. Immutable after construction.
//
// Each vertex keeps one bitset of positive neighbours and one of negative
// neighbours so that signed common neighbourhoods are word-wise ANDs.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(std::size_t n);
  // Throws Error(InvalidArgument) on out-of-range endpoints, loops or
  // repeated vertex pairs. Edge orientation is irrelevant.
  SignedGraph(std::size_t n, std::span<const SignedEdge> edges);

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  std::optional<Sign> sign(Vertex u, Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  const VertexSet& neighbors(Vertex v, Sign s) const;
  // Sorted neighbour list regardless of sign.
  std::span<const Vertex> adjacency(Vertex v) const;
  std::size_t degree(Vertex v) const;

  // Edges with u < v, sorted lexicographically.
  std::vector<SignedEdge> edges() const;

  bool is_complete() const noexcept;
  bool same_underlying(const SignedGraph& other) const;

  SignedGraph without_edge(Vertex u, Vertex v) const;
  // Subgraph induced by `keep`, relabelled 0..k-1 in the given order.
  SignedGraph induced(std::span<const Vertex> keep) const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b);

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> pos_;
  std::vector<VertexSet> neg_;
  std::vector<std::vector<Vertex>> adj_;
};

// Subset of the vertex set at which re-signing is applied.
class SwitchSet {
 public:
  SwitchSet() = default;
  explicit SwitchSet(std::size_t universe) : bits_(universe) {}
  SwitchSet(std::size_t universe, std::initializer_list<Vertex> members);
  explicit SwitchSet(VertexSet bits) : bits_(std::move(bits)) {}

  std::size_t universe() const noexcept { return bits_.universe(); }
  std::size_t size() const noexcept { return bits_.size(); }
  bool contains(Vertex v) const noexcept { return bits_.contains(v); }
  Sign factor(Vertex v) const noexcept { return switch_factor(contains(v)); }
  void insert(Vertex v);
  void toggle(Vertex v);

  const VertexSet& members() const noexcept { return bits_; }
  SwitchSet complement() const { return SwitchSet(bits_.complement()); }

  friend SwitchSet operator^(const SwitchSet& a, const SwitchSet& b) {
    return SwitchSet(a.bits_ ^ b.bits_);
  }
  friend bool operator==(const SwitchSet&, const SwitchSet&) = default;

 private:
  VertexSet bits_;
};

struct GraphStats {
  std::size_t max_degree = 0;
  bool is_regular = true;
  bool is_connected = true;
  std::size_t degeneracy = 0;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

// Re-sign every vertex of S: an edge flips iff exactly one endpoint is in S.
SignedGraph apply_switch(const SignedGraph& g, const SwitchSet& s);

const VertexSet& signed_neighbors(const SignedGraph& g, Vertex v, Sign a);

// Vertices that are an a[i]-neighbour of J[i] for every i. The empty tuple
// yields every vertex. A member of J is never in the result (no loops).
VertexSet common_signed_neighborhood(const SignedGraph& g,
                                     std::span<const Vertex> tuple,
                                     std::span<const Sign> signs);

// Returns S with apply_switch(a, S) == b, or nullopt if none exists. Throws if
// the underlying graphs differ.
std::optional<SwitchSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b);

// Ordering in which each vertex has at most d earlier neighbours, obtained by
// reversing a min-degree peeling (ties to the smallest id). nullopt iff the
// graph is not d-degenerate.
std::optional<std::vector<Vertex>> degeneracy_ordering(const SignedGraph& g, std::size_t d);

// Same, restricted to the subgraph induced by `subset`.
std::optional<std::vector<Vertex>> degeneracy_ordering(const SignedGraph& g, std::size_t d,
                                                       const VertexSet& subset);

GraphStats graph_stats(const SignedGraph& g);

bool is_connected(const SignedGraph& g);

}  // namespace sgh
