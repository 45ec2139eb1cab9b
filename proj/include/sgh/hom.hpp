#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sgh/signed_graph.hpp"

namespace sgh {

// Vertex map plus the source-side switch set under which it preserves signs.
struct SignedHom {
  std::vector<Vertex> map;
  SwitchSet switches;

  friend bool operator==(const SignedHom&, const SignedHom&) = default;
};

struct ChromaticWitness {
  std::size_t value = 0;
  SignedGraph target;
  SignedHom hom;
};

// True iff every edge uv of g lands on an edge of h with the same sign.
// Throws Error(InvalidArgument) if `map` is partial or has an image outside h.
bool check_2ec_hom(const SignedGraph& g, const SignedGraph& h, std::span<const Vertex> map);

bool check_signed_hom(const SignedGraph& g, const SignedGraph& h, const SignedHom& hom);

// Backtracking search over (image, switch bit) per source vertex with forward
// checking on the neighbours' candidate sets. Deterministic.
std::optional<SignedHom> find_signed_hom(const SignedGraph& g, const SignedGraph& h);

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

// Enumerates every map and every switch set. Throws Error(BudgetExceeded)
// when |V(h)|^|V(g)| * 2^|V(g)| exceeds `budget`.
std::optional<SignedHom> exhaustive_hom_oracle(const SignedGraph& g, const SignedGraph& h,
                                               std::uint64_t budget = kDefaultOracleBudget);

// Smallest k <= max_order (default: order of g) such that g maps to some
// signed graph on k vertices. The witness target is the quotient by the
// found partition. nullopt if the value exceeds max_order.
std::optional<ChromaticWitness> signed_chromatic_number(
    const SignedGraph& g, std::optional<std::size_t> max_order = std::nullopt);

// As above, without re-signing.
std::optional<ChromaticWitness> two_ec_chromatic_number(
    const SignedGraph& g, std::optional<std::size_t> max_order = std::nullopt);

// Decision version at a fixed order k; used to re-check minimality.
std::optional<ChromaticWitness> quotient_search(const SignedGraph& g, std::size_t k,
                                                bool allow_switching);

}  // namespace sgh
