#include "sgh/hom.hpp"

#include <array>
#include <limits>
#include <string>

#include "search_order.hpp"
#include "sgh/error.hpp"

namespace sgh {
namespace {

void check_map_shape(const SignedGraph& g, const SignedGraph& h, std::span<const Vertex> map) {
  if (map.size() != g.order()) {
    fail(ErrorCode::InvalidArgument, "vertex map covers " + std::to_string(map.size()) +
                                         " of " + std::to_string(g.order()) + " source vertices");
  }
  for (std::size_t v = 0; v < map.size(); ++v) {
    if (map[v] >= h.order()) {
      fail(ErrorCode::InvalidArgument, "image " + std::to_string(map[v]) + " of vertex " +
                                           std::to_string(v) + " outside target of order " +
                                           std::to_string(h.order()));
    }
  }
}

class HomSearch {
 public:
  HomSearch(const SignedGraph& g, const SignedGraph& h)
      : g_(g), h_(h), plan_(detail::connectivity_order(g)), image_(g.order()),
        bit_(g.order(), false), placed_(g.order(), false),
        domain_(g.order(), {VertexSet::full(h.order()), VertexSet::full(h.order())}) {}

  std::optional<SignedHom> run() {
    if (!extend(0)) return std::nullopt;
    SignedHom hom{image_, SwitchSet(g_.order())};
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (bit_[v]) hom.switches.insert(v);
    }
    return hom;
  }

 private:
  using Domains = std::array<VertexSet, 2>;

  bool extend(std::size_t depth) {
    if (depth == plan_.order.size()) return true;
    const Vertex v = plan_.order[depth];
    // Re-signing a whole component changes nothing, so roots stay unswitched.
    const int bits = plan_.roots[depth] ? 1 : 2;
    const std::vector<Vertex> candidates = (domain_[v][0] | domain_[v][1]).to_vector();
    for (Vertex x : candidates) {
      for (int b = 0; b < bits; ++b) {
        if (!domain_[v][b].contains(x)) continue;
        if (place(v, x, b == 1) && extend(depth + 1)) return true;
        unplace(v);
      }
    }
    return false;
  }

  // Assigns v -> (x, bit) and narrows unplaced neighbours; false on a wipe-out.
  bool place(Vertex v, Vertex x, bool bit) {
    image_[v] = x;
    bit_[v] = bit;
    placed_[v] = true;
    auto& saved = trail_.emplace_back();
    bool ok = true;
    for (Vertex w : g_.adjacency(v)) {
      if (placed_[w]) continue;
      saved.emplace_back(w, domain_[w]);
      const Sign base = *g_.sign(v, w) * switch_factor(bit);
      domain_[w][0] &= h_.neighbors(x, base);
      domain_[w][1] &= h_.neighbors(x, flip(base));
      if (domain_[w][0].empty() && domain_[w][1].empty()) {
        ok = false;
        break;
      }
    }
    return ok;
  }

  void unplace(Vertex v) {
    auto& saved = trail_.back();
    for (auto it = saved.rbegin(); it != saved.rend(); ++it) domain_[it->first] = std::move(it->second);
    trail_.pop_back();
    placed_[v] = false;
  }

  const SignedGraph& g_;
  const SignedGraph& h_;
  detail::SearchOrder plan_;
  std::vector<Vertex> image_;
  std::vector<bool> bit_;
  std::vector<bool> placed_;
  std::vector<Domains> domain_;
  std::vector<std::vector<std::pair<Vertex, Domains>>> trail_;
};

}  // namespace

bool check_2ec_hom(const SignedGraph& g, const SignedGraph& h, std::span<const Vertex> map) {
  check_map_shape(g, h, map);
  for (const auto& e : g.edges()) {
    const auto image_sign = h.sign(map[e.u], map[e.v]);
    if (!image_sign || *image_sign != e.sign) return false;
  }
  return true;
}

bool check_signed_hom(const SignedGraph& g, const SignedGraph& h, const SignedHom& hom) {
  check_map_shape(g, h, hom.map);
  if (hom.switches.universe() != g.order()) {
    fail(ErrorCode::InvalidArgument, "switch set universe " +
                                         std::to_string(hom.switches.universe()) +
                                         " does not match source order " +
                                         std::to_string(g.order()));
  }
  return check_2ec_hom(apply_switch(g, hom.switches), h, hom.map);
}

std::optional<SignedHom> find_signed_hom(const SignedGraph& g, const SignedGraph& h) {
  auto hom = HomSearch(g, h).run();
  if (hom && !check_signed_hom(g, h, *hom)) {
    throw std::logic_error("find_signed_hom produced an invalid homomorphism");
  }
  return hom;
}

std::optional<SignedHom> exhaustive_hom_oracle(const SignedGraph& g, const SignedGraph& h,
                                               std::uint64_t budget) {
  const std::size_t n = g.order();
  const std::size_t k = h.order();
  // Saturating |V(h)|^n * 2^n.
  double work = 1.0;
  for (std::size_t i = 0; i < n; ++i) work *= 2.0 * static_cast<double>(k);
  if (n >= 64 || work > static_cast<double>(budget)) {
    fail(ErrorCode::BudgetExceeded, "exhaustive oracle needs " + std::to_string(work) +
                                        " checks, budget is " + std::to_string(budget));
  }
  if (n == 0) return SignedHom{{}, SwitchSet(0)};
  if (k == 0) return std::nullopt;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    SwitchSet switches(n);
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) switches.insert(v);
    }
    const SignedGraph switched = apply_switch(g, switches);
    std::vector<Vertex> map(n, 0);
    while (true) {
      if (check_2ec_hom(switched, h, map)) return SignedHom{map, switches};
      std::size_t i = 0;
      while (i < n && ++map[i] == k) map[i++] = 0;
      if (i == n) break;
    }
  }
  return std::nullopt;
}

}  // namespace sgh
