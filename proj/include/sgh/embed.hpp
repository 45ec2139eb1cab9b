#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sgh/hom.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/target.hpp"

namespace sgh {

struct EmbedOptions {
  // Limit on undo steps taken when a placement finds no admissible image.
  std::size_t max_backtracks = 100'000;
  // Re-check both embedding invariants after every placement.
  bool debug_checks = false;
};

struct EmbedStats {
  std::size_t placements = 0;
  std::size_t backtracks = 0;
  // Steps where |D| fell below 1 + (t - p)(t - 2), i.e. evidence that the
  // target does not have property P_{t-1}.
  std::size_t guard_violations = 0;
  // Smallest |D \ B| seen over all placements.
  std::size_t min_slack = 0;
};

struct EmbedResult {
  SignedHom hom;
  EmbedStats stats;
};

// Greedy embedding of g into c along a (t-1)-degeneracy ordering. Each vertex
// takes the smallest target vertex that extends the partial homomorphism
// under some switch bit and that keeps the images of every unplaced
// vertex's placed neighbours pairwise distinct.
//
// Requires max degree <= t and a (t-1)-degeneracy ordering; c must be
// complete. Throws Error(InvalidArgument) on violated preconditions and
// Error(EmbedStuck) if backtracking is exhausted.
EmbedResult greedy_embed(const SignedGraph& g, const SignedGraph& c, unsigned t,
                         const EmbedOptions& opts = {});

struct AugmentedTarget {
  SignedGraph graph;
  std::size_t base_order = 0;
  // Fresh target vertices standing in for the endpoints of the removed edge.
  Vertex image_u = 0;
  Vertex image_v = 0;
};

struct RegularFixResult {
  SignedHom hom;
  AugmentedTarget target;
  SignedEdge removed_edge{};
  EmbedStats stats;
};

// For a connected regular g of degree <= t: removes the smallest non-bridge
// edge uv, embeds the rest greedily while keeping the images of N(u) and of
// N(v) pairwise distinct, then maps u and v to two new vertices appended to c.
RegularFixResult embed_with_regular_fix(const SignedGraph& g, const SignedGraph& c, unsigned t,
                                        const EmbedOptions& opts = {});

struct PipelineOptions {
  std::uint64_t max_attempts = kDefaultMaxAttempts;
  PropertyOptions property;
  EmbedOptions embed;
  // Reuse a previously certified target instead of constructing one; it must
  // certify t equal to the maximum degree.
  const ConstructedTarget* cached_target = nullptr;
};

struct PipelineResult {
  SignedHom hom;
  // Base target, or the augmented one when the regular fix was applied.
  SignedGraph target;
  TargetCertificate certificate;
  bool regular_fix = false;
  std::optional<SignedEdge> removed_edge;
  EmbedStats stats;
};

// Connected g with max degree >= 3: certify a target for t = max degree and
// embed into it, applying the regular fix when g is regular.
PipelineResult end_to_end(const SignedGraph& g, std::uint64_t seed,
                          const PipelineOptions& opts = {});

}  // namespace sgh
