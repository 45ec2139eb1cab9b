#include <string>
#include <vector>

#include "search_order.hpp"
#include "sgh/error.hpp"
#include "sgh/hom.hpp"

namespace sgh {
namespace {

// Assigns every vertex a part in 0..k-1 and a switch bit so that adjacent
// vertices lie in different parts and all re-signed edges between two given
// parts carry one sign. Such an assignment is exactly a signed homomorphism
// onto the quotient graph on k vertices.
class QuotientSearch {
 public:
  QuotientSearch(const SignedGraph& g, std::size_t k, bool allow_switching)
      : g_(g), k_(k), allow_switching_(allow_switching), plan_(detail::connectivity_order(g)),
        part_(g.order(), 0), bit_(g.order(), false), placed_(g.order(), false),
        pair_sign_(k * k, Sign::Positive), pair_count_(k * k, 0) {}

  std::optional<ChromaticWitness> run() {
    if (!extend(0, 0)) return std::nullopt;
    std::vector<SignedEdge> edges;
    for (Vertex p = 0; p < k_; ++p) {
      for (Vertex q = p + 1; q < k_; ++q) {
        if (pair_count_[p * k_ + q] > 0) edges.push_back({p, q, pair_sign_[p * k_ + q]});
      }
    }
    ChromaticWitness w;
    w.value = k_;
    w.target = SignedGraph(k_, edges);
    w.hom.map = part_;
    w.hom.switches = SwitchSet(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (bit_[v]) w.hom.switches.insert(v);
    }
    return w;
  }

 private:
  bool extend(std::size_t depth, std::size_t used) {
    if (depth == plan_.order.size()) return true;
    const Vertex v = plan_.order[depth];
    const int bits = (allow_switching_ && !plan_.roots[depth]) ? 2 : 1;
    // Parts are interchangeable, so only one unused part is ever tried.
    const std::size_t limit = std::min(used + 1, k_);
    for (std::size_t p = 0; p < limit; ++p) {
      for (int b = 0; b < bits; ++b) {
        if (!assign(v, static_cast<Vertex>(p), b == 1)) continue;
        if (extend(depth + 1, std::max(used, p + 1))) return true;
        release(v);
      }
    }
    return false;
  }

  bool assign(Vertex v, Vertex p, bool bit) {
    std::vector<std::size_t> touched;
    for (Vertex w : g_.adjacency(v)) {
      if (!placed_[w]) continue;
      const Vertex q = part_[w];
      bool ok = q != p;
      if (ok) {
        const Sign s = *g_.sign(v, w) * switch_factor(bit) * switch_factor(bit_[w]);
        const std::size_t a = std::min(p, q) * k_ + std::max(p, q);
        if (pair_count_[a] == 0) {
          pair_sign_[a] = s;
        } else {
          ok = pair_sign_[a] == s;
        }
        if (ok) {
          ++pair_count_[a];
          touched.push_back(a);
        }
      }
      if (!ok) {
        for (auto a : touched) --pair_count_[a];
        return false;
      }
    }
    part_[v] = p;
    bit_[v] = bit;
    placed_[v] = true;
    return true;
  }

  void release(Vertex v) {
    placed_[v] = false;
    const Vertex p = part_[v];
    for (Vertex w : g_.adjacency(v)) {
      if (!placed_[w]) continue;
      const Vertex q = part_[w];
      --pair_count_[std::min(p, q) * k_ + std::max(p, q)];
    }
  }

  const SignedGraph& g_;
  std::size_t k_;
  bool allow_switching_;
  detail::SearchOrder plan_;
  std::vector<Vertex> part_;
  std::vector<bool> bit_;
  std::vector<bool> placed_;
  std::vector<Sign> pair_sign_;
  std::vector<std::size_t> pair_count_;
};

std::optional<ChromaticWitness> chromatic_number(const SignedGraph& g,
                                                 std::optional<std::size_t> max_order,
                                                 bool allow_switching) {
  if (max_order && *max_order < 1) fail(ErrorCode::InvalidArgument, "max_order must be at least 1");
  if (g.order() == 0) return ChromaticWitness{0, SignedGraph(0), SignedHom{{}, SwitchSet(0)}};
  const std::size_t limit = max_order.value_or(g.order());
  for (std::size_t k = 1; k <= limit; ++k) {
    if (auto w = quotient_search(g, k, allow_switching)) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<ChromaticWitness> quotient_search(const SignedGraph& g, std::size_t k,
                                                bool allow_switching) {
  if (k == 0) return std::nullopt;
  auto w = QuotientSearch(g, k, allow_switching).run();
  if (w && !check_signed_hom(g, w->target, w->hom)) {
    throw std::logic_error("quotient search produced an invalid homomorphism");
  }
  return w;
}

std::optional<ChromaticWitness> signed_chromatic_number(const SignedGraph& g,
                                                        std::optional<std::size_t> max_order) {
  return chromatic_number(g, max_order, true);
}

std::optional<ChromaticWitness> two_ec_chromatic_number(const SignedGraph& g,
                                                        std::optional<std::size_t> max_order) {
  return chromatic_number(g, max_order, false);
}

}  // namespace sgh
