#include "sgh/embed.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>

#include "sgh/error.hpp"

namespace sgh {
namespace {

struct Candidate {
  Vertex image;
  bool switched;
};

struct Frame {
  std::vector<Candidate> candidates;
  std::size_t next = 0;
  std::size_t placed_neighbors = 0;
  std::size_t d_size = 0;
  std::size_t b_size = 0;
};

// Places the vertices of `order` one at a time. Vertices missing from `order`
// are never placed and so count as unplaced neighbours throughout: the images
// of their neighbours stay pairwise distinct.
class GreedyEmbedder {
 public:
  GreedyEmbedder(const SignedGraph& g, const SignedGraph& c, unsigned t, std::vector<Vertex> order,
                 const EmbedOptions& opts)
      : g_(g), c_(c), t_(t), order_(std::move(order)), opts_(opts), placed_(g.order(), false), image_(g.order(), 0), switched_(g.order(), false) {
    stats_.min_slack = c.order();
  }

  void run() {
    std::vector<Frame> frames;
    frames.reserve(order_.size());
    std::size_t depth = 0;
    while (depth < order_.size()) {
      if (frames.size() == depth) frames.push_back(candidates_for(order_[depth]));
      Frame& frame = frames[depth];
      if (frame.next < frame.candidates.size()) {
        place(order_[depth], frame.candidates[frame.next++]);
        ++stats_.placements;
        if (opts_.debug_checks) check_invariants();
        ++depth;
        continue;
      }
      if (depth == 0 || stats_.backtracks >= opts_.max_backtracks) stuck(depth, frame);
      frames.pop_back();
      --depth;
      placed_[order_[depth]] = false;
      ++stats_.backtracks;
    }
  }

  const std::vector<Vertex>& images() const { return image_; }
  const std::vector<bool>& switches() const { return switched_; }
  const EmbedStats& stats() const { return stats_; }

 private:
  Frame candidates_for(Vertex v) {
    Frame frame;
    std::vector<Vertex> tuple;
    std::vector<Sign> unswitched;
    for (Vertex w : g_.adjacency(v)) {
      if (!placed_[w]) continue;
      tuple.push_back(image_[w]);
      unswitched.push_back(*g_.sign(v, w) * switch_factor(switched_[w]));
    }
    frame.placed_neighbors = tuple.size();

    VertexSet d_plain = common_signed_neighborhood(c_, tuple, unswitched);
    VertexSet d_switched(c_.order());
    if (!tuple.empty()) {
      std::vector<Sign> flipped(unswitched.size());
      std::transform(unswitched.begin(), unswitched.end(), flipped.begin(), flip);
      d_switched = common_signed_neighborhood(c_, tuple, flipped);
      // A target vertex cannot be both a +- and a --neighbour of J[0].
      if (!(d_plain & d_switched).empty()) {
        throw std::logic_error("candidate sets for the two switch bits overlap");
      }
    }
    frame.d_size = d_plain.size() + d_switched.size();

    const std::size_t p = tuple.size();
    const bool guard_ok =
        p == 0 ? 2 * static_cast<std::int64_t>(c_.order()) >= property_threshold(t_, 0)
               : static_cast<std::int64_t>(frame.d_size) >= property_threshold(t_, static_cast<unsigned>(p));
    if (!guard_ok) ++stats_.guard_violations;

    // Images already used around each unplaced neighbour of v.
    VertexSet blocked(c_.order());
    for (Vertex w : g_.adjacency(v)) {
      if (placed_[w]) continue;
      for (Vertex y : g_.adjacency(w)) {
        if (y != v && placed_[y]) blocked.insert(image_[y]);
      }
    }
    frame.b_size = blocked.size();

    d_plain -= blocked;
    d_switched -= blocked;
    (d_plain | d_switched).for_each([&](Vertex x) {
      frame.candidates.push_back({x, d_switched.contains(x)});
    });
    stats_.min_slack = std::min(stats_.min_slack, frame.candidates.size());
    return frame;
  }

  void place(Vertex v, Candidate cand) {
    image_[v] = cand.image;
    switched_[v] = cand.switched;
    placed_[v] = true;
  }

  [[noreturn]] void stuck(std::size_t depth, const Frame& frame) const {
    std::ostringstream msg;
    msg << "greedy embedding stuck at position " << depth << " (vertex " << order_[depth]
        << "): " << frame.placed_neighbors << " placed neighbours, |D| = " << frame.d_size
        << ", |B| = " << frame.b_size << ", after " << stats_.backtracks << " backtracks";
    if (stats_.guard_violations > 0) {
      msg << "; counting guard violated " << stats_.guard_violations
          << " times, the target likely lacks property P_" << (t_ - 1);
    }
    fail(ErrorCode::EmbedStuck, msg.str());
  }

  void check_invariants() const {
    for (const auto& e : g_.edges()) {
      if (!placed_[e.u] || !placed_[e.v]) continue;
      const Sign want = e.sign * switch_factor(switched_[e.u]) * switch_factor(switched_[e.v]);
      if (c_.sign(image_[e.u], image_[e.v]) != want) {
        throw std::logic_error("partial map is not a homomorphism of the placed prefix");
      }
    }
    for (Vertex w = 0; w < g_.order(); ++w) {
      if (placed_[w]) continue;
      VertexSet seen(c_.order());
      for (Vertex y : g_.adjacency(w)) {
        if (!placed_[y]) continue;
        if (seen.contains(image_[y])) {
          throw std::logic_error("placed neighbours of an unplaced vertex share an image");
        }
        seen.insert(image_[y]);
      }
    }
  }

  const SignedGraph& g_;
  const SignedGraph& c_;
  unsigned t_;
  std::vector<Vertex> order_;
  EmbedOptions opts_;
  std::vector<bool> placed_;
  std::vector<Vertex> image_;
  std::vector<bool> switched_;
  EmbedStats stats_;
};

void check_target(const SignedGraph& c, unsigned t) {
  if (t < 2) fail(ErrorCode::InvalidArgument, "embedding needs t >= 2");
  if (!c.is_complete()) fail(ErrorCode::InvalidArgument, "embedding target must be a complete signed graph");
  if (c.order() == 0) fail(ErrorCode::InvalidArgument, "embedding target is empty");
}

SignedHom to_hom(const GreedyEmbedder& e, std::size_t n) {
  SignedHom hom{e.images(), SwitchSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    if (e.switches()[v]) hom.switches.insert(v);
  }
  return hom;
}

}  // namespace

EmbedResult greedy_embed(const SignedGraph& g, const SignedGraph& c, unsigned t,
                         const EmbedOptions& opts) {
  check_target(c, t);
  const GraphStats stats = graph_stats(g);
  if (stats.max_degree > t) {
    fail(ErrorCode::InvalidArgument, "source max degree " + std::to_string(stats.max_degree) +
                                         " exceeds t=" + std::to_string(t));
  }
  auto order = degeneracy_ordering(g, t - 1);
  if (!order) {
    fail(ErrorCode::InvalidArgument, "source graph is not " + std::to_string(t - 1) +
                                         "-degenerate; regular graphs need the regular fix");
  }
  GreedyEmbedder embedder(g, c, t, std::move(*order), opts);
  embedder.run();
  EmbedResult out{to_hom(embedder, g.order()), embedder.stats()};
  if (!check_signed_hom(g, c, out.hom)) {
    throw std::logic_error("greedy embedding produced an invalid homomorphism");
  }
  return out;
}

RegularFixResult embed_with_regular_fix(const SignedGraph& g, const SignedGraph& c, unsigned t,
                                        const EmbedOptions& opts) {
  check_target(c, t);
  const GraphStats stats = graph_stats(g);
  if (!stats.is_regular || g.edge_count() == 0) {
    fail(ErrorCode::InvalidArgument, "regular fix needs a regular graph with at least one edge");
  }
  if (!stats.is_connected) fail(ErrorCode::InvalidArgument, "regular fix needs a connected graph");
  if (stats.max_degree > t) {
    fail(ErrorCode::InvalidArgument, "source degree " + std::to_string(stats.max_degree) +
                                         " exceeds t=" + std::to_string(t));
  }

  const auto edges = g.edges();
  SignedEdge removed = edges.front();
  for (const auto& e : edges) {
    if (is_connected(g.without_edge(e.u, e.v))) {
      removed = e;
      break;
    }
  }
  const Vertex u = removed.u;
  const Vertex v = removed.v;

  VertexSet rest = VertexSet::full(g.order());
  rest.erase(u);
  rest.erase(v);
  auto order = degeneracy_ordering(g, t - 1, rest);
  if (!order) throw std::logic_error("graph minus two adjacent vertices is not (t-1)-degenerate");
  GreedyEmbedder embedder(g, c, t, std::move(*order), opts);
  embedder.run();

  RegularFixResult out;
  out.removed_edge = removed;
  out.stats = embedder.stats();
  out.hom = to_hom(embedder, g.order());

  const auto base = static_cast<Vertex>(c.order());
  const Vertex xu = base;
  const Vertex xv = base + 1;
  out.hom.map[u] = xu;
  out.hom.map[v] = xv;

  // u and v stay unswitched, so each new edge carries the re-signed source sign.
  std::vector<SignedEdge> aug = c.edges();
  aug.push_back({xu, xv, removed.sign});
  for (const auto& [endpoint, fresh] : {std::pair{u, xu}, std::pair{v, xv}}) {
    VertexSet used(c.order());
    for (Vertex w : g.adjacency(endpoint)) {
      if (w == u || w == v) continue;
      const Vertex img = out.hom.map[w];
      used.insert(img);
      aug.push_back({fresh, img, *g.sign(endpoint, w) * out.hom.switches.factor(w)});
    }
    // Unconstrained pairs are filled positive to keep the target complete.
    for (Vertex x = 0; x < base; ++x) {
      if (!used.contains(x)) aug.push_back({fresh, x, Sign::Positive});
    }
  }
  out.target.graph = SignedGraph(c.order() + 2, aug);
  out.target.base_order = c.order();
  out.target.image_u = xu;
  out.target.image_v = xv;

  if (!check_signed_hom(g, out.target.graph, out.hom)) {
    throw std::logic_error("regular fix produced an invalid homomorphism");
  }
  return out;
}

PipelineResult end_to_end(const SignedGraph& g, std::uint64_t seed, const PipelineOptions& opts) {
  const GraphStats stats = graph_stats(g);
  if (!stats.is_connected) fail(ErrorCode::InvalidArgument, "pipeline input must be connected");
  if (stats.max_degree < 3) {
    fail(ErrorCode::InvalidArgument, "pipeline needs max degree >= 3, got " + std::to_string(stats.max_degree));
  }
  const auto t = static_cast<unsigned>(stats.max_degree);

  std::optional<ConstructedTarget> built;
  const ConstructedTarget* target = opts.cached_target;
  if (target != nullptr) {
    if (target->certificate.t != t) {
      fail(ErrorCode::InvalidArgument, "cached target certifies t=" +
                                           std::to_string(target->certificate.t) + ", need t=" +
                                           std::to_string(t));
    }
  } else {
    built = construct_target(t, std::nullopt, seed, opts.max_attempts, opts.property);
    if (!built) {
      fail(ErrorCode::ConstructionFailed, "no target with property P_" + std::to_string(t - 1) +
                                              " found in " + std::to_string(opts.max_attempts) +
                                              " attempts");
    }
    target = &*built;
  }

  PipelineResult out;
  out.certificate = target->certificate;
  if (stats.is_regular) {
    auto fixed = embed_with_regular_fix(g, target->graph, t, opts.embed);
    out.hom = std::move(fixed.hom);
    out.target = std::move(fixed.target.graph);
    out.regular_fix = true;
    out.removed_edge = fixed.removed_edge;
    out.stats = fixed.stats;
  } else {
    auto res = greedy_embed(g, target->graph, t, opts.embed);
    out.hom = std::move(res.hom);
    out.target = target->graph;
    out.stats = res.stats;
  }
  return out;
}

}  // namespace sgh
