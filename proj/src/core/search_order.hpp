#pragma once

#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh::detail {

struct SearchOrder {
  std::vector<Vertex> order;
  // roots[i] is true when order[i] starts a new connected component.
  std::vector<bool> roots;
};

// Highest degree first; afterwards always the unplaced vertex with the most
// placed neighbours (ties: higher degree, then smaller id).
inline SearchOrder connectivity_order(const SignedGraph& g) {
  const std::size_t n = g.order();
  SearchOrder out;
  out.order.reserve(n);
  out.roots.reserve(n);
  std::vector<std::size_t> placed_nbrs(n, 0);
  std::vector<bool> placed(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!found || placed_nbrs[v] > placed_nbrs[best] ||
          (placed_nbrs[v] == placed_nbrs[best] && g.degree(v) > g.degree(best))) {
        best = v;
        found = true;
      }
    }
    out.roots.push_back(placed_nbrs[best] == 0);
    out.order.push_back(best);
    placed[best] = true;
    for (Vertex w : g.adjacency(best)) ++placed_nbrs[w];
  }
  return out;
}

}  // namespace sgh::detail
