#include <algorithm>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "sgh/error.hpp"
#include "sgh/signed_graph.hpp"

namespace sgh {
namespace {

void check_switch_range(const SignedGraph& g, const SwitchSet& s) {
  if (s.universe() <= g.order()) return;
  s.members().for_each([&](Vertex v) {
    if (v >= g.order()) {
      fail(ErrorCode::InvalidArgument, "switch vertex " + std::to_string(v) +
                                           " out of range for order " +
                                           std::to_string(g.order()));
    }
  });
}

// Min-degree peeling over the vertices of `alive`. Returns the removal order
// and the largest degree seen at removal time.
std::pair<std::vector<Vertex>, std::size_t> peel(const SignedGraph& g, const VertexSet& alive) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n, 0);
  std::set<std::pair<std::size_t, Vertex>> queue;
  alive.for_each([&](Vertex v) {
    for (Vertex w : g.adjacency(v)) deg[v] += alive.contains(w) ? 1 : 0;
    queue.emplace(deg[v], v);
  });
  VertexSet removed(n);
  std::vector<Vertex> order;
  order.reserve(queue.size());
  std::size_t worst = 0;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    worst = std::max(worst, d);
    removed.insert(v);
    order.push_back(v);
    for (Vertex w : g.adjacency(v)) {
      if (!alive.contains(w) || removed.contains(w)) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.emplace(deg[w], w);
    }
  }
  return {std::move(order), worst};
}

}  // namespace

SignedGraph apply_switch(const SignedGraph& g, const SwitchSet& s) {
  check_switch_range(g, s);
  auto es = g.edges();
  for (auto& e : es) {
    if (s.contains(e.u) != s.contains(e.v)) e.sign = flip(e.sign);
  }
  return SignedGraph(g.order(), es);
}

const VertexSet& signed_neighbors(const SignedGraph& g, Vertex v, Sign a) {
  return g.neighbors(v, a);
}

VertexSet common_signed_neighborhood(const SignedGraph& g, std::span<const Vertex> tuple,
                                     std::span<const Sign> signs) {
  if (tuple.size() != signs.size()) {
    fail(ErrorCode::InvalidArgument, "tuple has " + std::to_string(tuple.size()) +
                                         " vertices but sign vector has " +
                                         std::to_string(signs.size()) + " entries");
  }
  VertexSet seen(g.order());
  VertexSet out = VertexSet::full(g.order());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    g.check_vertex(tuple[i]);
    if (seen.contains(tuple[i])) {
      fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(tuple[i]) + " repeated in tuple");
    }
    seen.insert(tuple[i]);
    out &= g.neighbors(tuple[i], signs[i]);
  }
  return out;
}

std::optional<SwitchSet> switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b)) {
    fail(ErrorCode::InvalidArgument, "switching equivalence needs identical underlying graphs");
  }
  const std::size_t n = a.order();
  // Flipping the root bit complements the whole component, which is a
  // witness iff the original is, so one root parity suffices.
  SwitchSet bits(n);
  VertexSet visited(n);
  for (Vertex root = 0; root < n; ++root) {
    if (visited.contains(root)) continue;
    visited.insert(root);
    std::queue<Vertex> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      for (Vertex y : a.adjacency(x)) {
        if (visited.contains(y)) continue;
        visited.insert(y);
        const bool differs = *a.sign(x, y) != *b.sign(x, y);
        if (bits.contains(x) != differs) bits.insert(y);
        frontier.push(y);
      }
    }
  }
  for (const auto& e : a.edges()) {
    const bool differs = e.sign != *b.sign(e.u, e.v);
    if ((bits.contains(e.u) != bits.contains(e.v)) != differs) return std::nullopt;
  }
  return bits;
}

std::optional<std::vector<Vertex>> degeneracy_ordering(const SignedGraph& g, std::size_t d,
                                                       const VertexSet& subset) {
  auto [order, worst] = peel(g, subset);
  if (worst > d) return std::nullopt;
  std::reverse(order.begin(), order.end());
  return std::move(order);
}

std::optional<std::vector<Vertex>> degeneracy_ordering(const SignedGraph& g, std::size_t d) {
  return degeneracy_ordering(g, d, VertexSet::full(g.order()));
}

bool is_connected(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return true;
  VertexSet visited(n);
  std::vector<Vertex> stack{0};
  visited.insert(0);
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.adjacency(x)) {
      if (!visited.contains(y)) {
        visited.insert(y);
        ++reached;
        stack.push_back(y);
      }
    }
  }
  return reached == n;
}

GraphStats graph_stats(const SignedGraph& g) {
  GraphStats stats;
  const std::size_t n = g.order();
  if (n == 0) return stats;
  std::size_t min_degree = g.degree(0);
  for (Vertex v = 0; v < n; ++v) {
    stats.max_degree = std::max(stats.max_degree, g.degree(v));
    min_degree = std::min(min_degree, g.degree(v));
  }
  stats.is_regular = min_degree == stats.max_degree;
  stats.is_connected = is_connected(g);
  stats.degeneracy = peel(g, VertexSet::full(n)).second;
  return stats;
}

}  // namespace sgh
