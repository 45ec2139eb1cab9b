#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sgh/error.hpp"
#include "sgh/io.hpp"

namespace sgh {
namespace {

constexpr int kMaxRestarts = 10'000;

std::size_t below(std::mt19937_64& rng, std::size_t k) { return static_cast<std::size_t>(rng() % k); }

bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

// Pairing model: repeatedly match a random free point with a random point it
// may legally pair with; restart when a point has no legal partner left.
std::optional<std::vector<std::pair<Vertex, Vertex>>> try_regular(std::mt19937_64& rng,
                                                                  std::size_t n, std::size_t delta) {
  std::vector<Vertex> points;
  points.reserve(n * delta);
  for (Vertex v = 0; v < n; ++v) points.insert(points.end(), delta, v);
  std::vector<VertexSet> adj(n, VertexSet(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (!points.empty()) {
    const std::size_t i = below(rng, points.size());
    const Vertex a = points[i];
    std::swap(points[i], points.back());
    points.pop_back();
    std::vector<std::size_t> legal;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (points[k] != a && !adj[a].contains(points[k])) legal.push_back(k);
    }
    if (legal.empty()) return std::nullopt;
    const std::size_t k = legal[below(rng, legal.size())];
    const Vertex b = points[k];
    std::swap(points[k], points.back());
    points.pop_back();
    adj[a].insert(b);
    adj[b].insert(a);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return edges;
}

std::vector<std::pair<Vertex, Vertex>> irregular(std::mt19937_64& rng, std::size_t n,
                                                 std::size_t delta) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[below(rng, i + 1)]);

  std::vector<std::size_t> deg(n, 0);
  std::vector<VertexSet> adj(n, VertexSet(n));
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto add = [&](Vertex a, Vertex b) {
    ++deg[a];
    ++deg[b];
    adj[a].insert(b);
    adj[b].insert(a);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  // Spanning tree: attach each vertex to a random earlier one with spare degree.
  for (std::size_t i = 1; i < n; ++i) {
    std::vector<Vertex> open;
    for (std::size_t k = 0; k < i; ++k) {
      if (deg[perm[k]] < delta) open.push_back(perm[k]);
    }
    add(perm[i], open[below(rng, open.size())]);
  }
  const std::size_t tree_edges = edges.size();
  for (std::size_t tries = 0; tries < n * delta; ++tries) {
    const auto a = static_cast<Vertex>(below(rng, n));
    const auto b = static_cast<Vertex>(below(rng, n));
    if (a == b || adj[a].contains(b) || deg[a] >= delta || deg[b] >= delta) continue;
    add(a, b);
  }
  // Dropping a non-tree edge keeps the graph connected and breaks regularity.
  if (std::all_of(deg.begin(), deg.end(), [&](std::size_t d) { return d == delta; }) &&
      edges.size() > tree_edges) {
    edges.pop_back();
  }
  return edges;
}

}  // namespace

SignedGraph random_bounded_degree_graph(std::size_t n, std::size_t delta, bool regular,
                                        double neg_prob, std::uint64_t seed) {
  if (n < 2) fail(ErrorCode::InvalidArgument, "random graph needs n >= 2");
  if (delta < 1 || delta >= n) {
    fail(ErrorCode::InvalidArgument, "random graph needs 1 <= delta < n, got delta=" + std::to_string(delta));
  }
  if (!(neg_prob >= 0.0 && neg_prob <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "negative-edge probability must lie in [0, 1]");
  }
  if (regular && (n * delta) % 2 != 0) {
    fail(ErrorCode::InvalidArgument, "no " + std::to_string(delta) + "-regular graph on " +
                                         std::to_string(n) + " vertices (n*delta odd)");
  }
  if (!regular && delta == 1) {
    fail(ErrorCode::InvalidArgument, "every connected graph with max degree 1 is regular");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (regular) {
    bool done = false;
    for (int attempt = 0; attempt < kMaxRestarts && !done; ++attempt) {
      auto edges = try_regular(rng, n, delta);
      if (!edges) continue;
      std::vector<SignedEdge> probe;
      for (auto [a, b] : *edges) probe.push_back({a, b, Sign::Positive});
      if (!is_connected(SignedGraph(n, probe))) continue;
      pairs = std::move(*edges);
      done = true;
    }
    if (!done) {
      fail(ErrorCode::InvalidArgument, "no connected " + std::to_string(delta) +
                                           "-regular graph found within the retry cap");
    }
  } else {
    pairs = irregular(rng, n, delta);
  }

  std::sort(pairs.begin(), pairs.end());
  std::vector<SignedEdge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    edges.push_back({a, b, bernoulli(rng, neg_prob) ? Sign::Negative : Sign::Positive});
  }
  return SignedGraph(n, edges);
}

}  // namespace sgh
