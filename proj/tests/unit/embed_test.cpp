#include <gtest/gtest.h>

#include <random>

#include "sgh/embed.hpp"
#include "sgh/error.hpp"
#include "sgh/io.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

namespace sgh {
namespace {

using testing::N;
using testing::P;

const ConstructedTarget& target3() {
  static const ConstructedTarget t = *construct_target(3, 48, 2024);
  return t;
}

bool verified(const SignedGraph& g, const SignedGraph& h, const SignedHom& hom) {
  std::vector<bool> bits(g.order());
  for (Vertex v = 0; v < g.order(); ++v) bits[v] = hom.switches.contains(v);
  return oracle::is_signed_hom(g, h, hom.map, bits);
}

TEST(GreedyEmbed, SingleVertex) {
  const auto r = greedy_embed(SignedGraph(1), target3().graph, 3);
  EXPECT_EQ(r.hom.map.size(), 1U);
  EXPECT_TRUE(verified(SignedGraph(1), target3().graph, r.hom));
}

TEST(GreedyEmbed, K4MinusEdge) {
  std::mt19937_64 rng(71);
  const auto pairs = testing::uniform(4, testing::complete_pairs(4), P).without_edge(0, 1);
  std::vector<std::pair<Vertex, Vertex>> ps;
  for (const auto& e : pairs.edges()) ps.emplace_back(e.u, e.v);
  for (int i = 0; i < 10; ++i) {
    const SignedGraph g = testing::with_random_signs(4, ps, rng);
    EmbedOptions opts;
    opts.debug_checks = true;
    const auto r = greedy_embed(g, target3().graph, 3, opts);
    EXPECT_TRUE(verified(g, target3().graph, r.hom));
    EXPECT_EQ(r.stats.guard_violations, 0U);
  }
}

TEST(GreedyEmbed, RandomNonRegularSubcubic) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SignedGraph g = random_bounded_degree_graph(8 + seed % 50, 3, false, 0.5, seed);
    EmbedOptions opts;
    opts.debug_checks = seed % 10 == 0;
    const auto r = greedy_embed(g, target3().graph, 3, opts);
    EXPECT_TRUE(verified(g, target3().graph, r.hom)) << "seed " << seed;
    EXPECT_EQ(r.stats.backtracks, 0U);
    EXPECT_EQ(r.stats.guard_violations, 0U);
    EXPECT_EQ(r.stats.placements, g.order());
  }
}

TEST(GreedyEmbed, Preconditions) {
  const SignedGraph k4 = testing::uniform(4, testing::complete_pairs(4), P);
  EXPECT_THROW(greedy_embed(k4, target3().graph, 3), Error);  // 3-regular: not 2-degenerate
  const SignedGraph k5 = testing::uniform(5, testing::complete_pairs(5), P);
  EXPECT_THROW(greedy_embed(k5, target3().graph, 3), Error);
  EXPECT_THROW(greedy_embed(testing::uniform(3, testing::path_pairs(3), P),
                            testing::uniform(3, testing::path_pairs(3), P), 3),
               Error);
}

// A target without the property exposes itself through the counting guard
// or a stuck placement.
TEST(GreedyEmbed, WeakTargetIsReported) {
  const SignedGraph weak = testing::uniform(3, testing::complete_pairs(3), P);
  const SignedGraph g = testing::make(4, {{0, 2, N}, {0, 3, P}, {1, 2, P}, {1, 3, N}, {2, 3, P}});
  try {
    greedy_embed(g, weak, 3);
    FAIL() << "an unbalanced triangle has no image in a positive triangle";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmbedStuck);
    EXPECT_NE(std::string(e.what()).find("counting guard"), std::string::npos) << e.what();
  }
}

void expect_regular_fix(const SignedGraph& g) {
  const RegularFixResult r = embed_with_regular_fix(g, target3().graph, 3);
  EXPECT_EQ(r.target.graph.order(), 50U);
  EXPECT_EQ(r.target.base_order, 48U);
  EXPECT_TRUE(r.target.graph.is_complete());
  EXPECT_TRUE(verified(g, r.target.graph, r.hom));
  EXPECT_EQ(r.hom.map[r.removed_edge.u], r.target.image_u);
  EXPECT_EQ(r.hom.map[r.removed_edge.v], r.target.image_v);
  EXPECT_TRUE(is_connected(g.without_edge(r.removed_edge.u, r.removed_edge.v)));
  // The base target is left untouched.
  for (Vertex x = 0; x < 48; ++x) {
    for (Vertex y = x + 1; y < 48; ++y) EXPECT_EQ(r.target.graph.sign(x, y), target3().graph.sign(x, y));
  }
}

TEST(RegularFix, CubicFamilies) {
  expect_regular_fix(testing::uniform(4, testing::complete_pairs(4), P));
  std::mt19937_64 rng(72);
  expect_regular_fix(testing::with_random_signs(10, testing::petersen_pairs(), rng));
  expect_regular_fix(testing::uniform(6, testing::prism_pairs(), N));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    expect_regular_fix(random_bounded_degree_graph(10 + 2 * (seed % 10), 3, true, 0.5, seed));
  }
}

TEST(RegularFix, Preconditions) {
  EXPECT_THROW(embed_with_regular_fix(testing::uniform(4, testing::path_pairs(4), P), target3().graph, 3),
               Error);
  const SignedGraph two_triangles =
      testing::uniform(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}, P);
  EXPECT_THROW(embed_with_regular_fix(two_triangles, target3().graph, 3), Error);
}

TEST(Pipeline, NonRegularAndRegular) {
  PipelineOptions opts;
  opts.cached_target = &target3();
  const SignedGraph a = random_bounded_degree_graph(30, 3, false, 0.5, 9);
  const PipelineResult ra = end_to_end(a, 0, opts);
  EXPECT_FALSE(ra.regular_fix);
  EXPECT_EQ(ra.target.order(), 48U);
  EXPECT_TRUE(verified(a, ra.target, ra.hom));

  const SignedGraph b = random_bounded_degree_graph(12, 3, true, 0.5, 9);
  const PipelineResult rb = end_to_end(b, 5);
  EXPECT_TRUE(rb.regular_fix);
  ASSERT_TRUE(rb.removed_edge.has_value());
  EXPECT_EQ(rb.target.order(), 50U);
  EXPECT_TRUE(verified(b, rb.target, rb.hom));
  EXPECT_TRUE(verify_certificate(rb.certificate).ok());
}

TEST(Pipeline, Rejections) {
  EXPECT_THROW(end_to_end(testing::uniform(2, testing::path_pairs(2), P), 1), Error);
  const SignedGraph disconnected = testing::uniform(8, {{0, 1}, {0, 2}, {0, 3}, {4, 5}}, P);
  EXPECT_THROW(end_to_end(disconnected, 1), Error);
  PipelineOptions wrong;
  wrong.cached_target = &target3();
  const SignedGraph k5 = testing::uniform(5, testing::complete_pairs(5), P);
  EXPECT_THROW(end_to_end(k5, 1, wrong), Error);
}

}  // namespace
}  // namespace sgh
