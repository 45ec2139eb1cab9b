#include "sgh/signed_graph.hpp"

#include <algorithm>
#include <string>

#include "sgh/error.hpp"

namespace sgh {

SignedGraph::SignedGraph(std::size_t n)
    : n_(n), pos_(n, VertexSet(n)), neg_(n, VertexSet(n)), adj_(n) {}

SignedGraph::SignedGraph(std::size_t n, std::span<const SignedEdge> edges) : SignedGraph(n) {
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n) {
      fail(ErrorCode::InvalidArgument, "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                           " has an endpoint outside 0.." +
                                           std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) fail(ErrorCode::InvalidArgument, "loop at vertex " + std::to_string(e.u));
    if (pos_[e.u].contains(e.v) || neg_[e.u].contains(e.v)) {
      fail(ErrorCode::InvalidArgument,
           "repeated edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    auto& side = e.sign == Sign::Positive ? pos_ : neg_;
    side[e.u].insert(e.v);
    side[e.v].insert(e.u);
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    ++m_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

void SignedGraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    fail(ErrorCode::InvalidArgument,
         "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (pos_[u].contains(v)) return Sign::Positive;
  if (neg_[u].contains(v)) return Sign::Negative;
  return std::nullopt;
}

bool SignedGraph::adjacent(Vertex u, Vertex v) const { return sign(u, v).has_value(); }

const VertexSet& SignedGraph::neighbors(Vertex v, Sign s) const {
  check_vertex(v);
  return s == Sign::Positive ? pos_[v] : neg_[v];
}

std::span<const Vertex> SignedGraph::adjacency(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

std::size_t SignedGraph::degree(Vertex v) const {
  check_vertex(v);
  return adj_[v].size();
}

std::vector<SignedEdge> SignedGraph::edges() const {
  std::vector<SignedEdge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v, pos_[u].contains(v) ? Sign::Positive : Sign::Negative});
    }
  }
  return out;
}

bool SignedGraph::is_complete() const noexcept {
  return n_ == 0 || m_ == n_ * (n_ - 1) / 2;
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  return n_ == other.n_ && m_ == other.m_ && adj_ == other.adj_;
}

SignedGraph SignedGraph::without_edge(Vertex u, Vertex v) const {
  if (!adjacent(u, v)) {
    fail(ErrorCode::InvalidArgument,
         "no edge " + std::to_string(u) + "-" + std::to_string(v) + " to remove");
  }
  auto es = edges();
  const auto [a, b] = std::minmax(u, v);
  std::erase_if(es, [a = a, b = b](const SignedEdge& e) { return e.u == a && e.v == b; });
  return SignedGraph(n_, es);
}

SignedGraph SignedGraph::induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> relabel(n_, static_cast<Vertex>(n_));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    if (relabel[keep[i]] != n_) {
      fail(ErrorCode::InvalidArgument, "vertex " + std::to_string(keep[i]) + " kept twice");
    }
    relabel[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<SignedEdge> es;
  for (const auto& e : edges()) {
    if (relabel[e.u] != n_ && relabel[e.v] != n_) es.push_back({relabel[e.u], relabel[e.v], e.sign});
  }
  return SignedGraph(keep.size(), es);
}

bool operator==(const SignedGraph& a, const SignedGraph& b) {
  return a.n_ == b.n_ && a.m_ == b.m_ && a.pos_ == b.pos_ && a.neg_ == b.neg_;
}

SwitchSet::SwitchSet(std::size_t universe, std::initializer_list<Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) insert(v);
}

void SwitchSet::insert(Vertex v) {
  if (v >= universe()) {
    fail(ErrorCode::InvalidArgument, "switch vertex " + std::to_string(v) + " out of range");
  }
  bits_.insert(v);
}

void SwitchSet::toggle(Vertex v) {
  if (v >= universe()) {
    fail(ErrorCode::InvalidArgument, "switch vertex " + std::to_string(v) + " out of range");
  }
  bits_.toggle(v);
}

}  // namespace sgh
