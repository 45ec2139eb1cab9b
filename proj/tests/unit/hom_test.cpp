#include <gtest/gtest.h>

#include <random>

#include "sgh/error.hpp"
#include "sgh/hom.hpp"
#include "support/graphs.hpp"
#include "support/oracles.hpp"

namespace sgh {
namespace {

using testing::N;
using testing::P;

SignedGraph edge(Sign s) { return testing::make(2, {{0, 1, s}}); }

// Re-implementation of the 2ec condition straight from signs.
bool brute_2ec(const SignedGraph& g, const SignedGraph& h, const std::vector<Vertex>& map) {
  for (const auto& e : g.edges()) {
    if (map[e.u] == map[e.v] || h.sign(map[e.u], map[e.v]) != e.sign) return false;
  }
  return true;
}

bool brute_signed(const SignedGraph& g, const SignedGraph& h, const SignedHom& hom) {
  for (const auto& e : g.edges()) {
    const Sign s = e.sign * hom.switches.factor(e.u) * hom.switches.factor(e.v);
    if (hom.map[e.u] == hom.map[e.v] || h.sign(hom.map[e.u], hom.map[e.v]) != s) return false;
  }
  return true;
}

TEST(Check2ec, Examples) {
  const std::vector<Vertex> id{0, 1};
  EXPECT_TRUE(check_2ec_hom(edge(P), edge(P), id));
  EXPECT_FALSE(check_2ec_hom(edge(P), edge(N), id));
  const std::vector<Vertex> constant{0, 0, 0};
  EXPECT_FALSE(check_2ec_hom(testing::worked_triangle(), testing::worked_triangle(), constant));
}

TEST(Check2ec, RejectsMalformedMaps) {
  const std::vector<Vertex> partial{0};
  const std::vector<Vertex> outside{0, 5};
  EXPECT_THROW(check_2ec_hom(edge(P), edge(P), partial), Error);
  EXPECT_THROW(check_2ec_hom(edge(P), edge(P), outside), Error);
}

TEST(CheckSignedHom, Examples) {
  EXPECT_TRUE(check_signed_hom(edge(N), edge(P), SignedHom{{0, 1}, SwitchSet(2, {0})}));
  EXPECT_FALSE(check_signed_hom(edge(N), edge(P), SignedHom{{0, 1}, SwitchSet(2)}));
  EXPECT_THROW(check_signed_hom(edge(N), edge(P), SignedHom{{0, 1}, SwitchSet(3)}), Error);
}

TEST(CheckSignedHom, UnbalancedTriangleHasNoImageInPositiveTriangle) {
  const SignedGraph pos = testing::uniform(3, testing::complete_pairs(3), P);
  const SignedGraph unb = testing::unbalanced_triangle();
  for (std::uint32_t code = 0; code < 27; ++code) {
    const std::vector<Vertex> map{code % 3, (code / 3) % 3, code / 9};
    for (std::uint32_t mask = 0; mask < 8; ++mask) {
      SwitchSet s(3);
      for (Vertex v = 0; v < 3; ++v) {
        if ((mask >> v) & 1U) s.insert(v);
      }
      EXPECT_FALSE(check_signed_hom(unb, pos, SignedHom{map, s}));
    }
  }
}

TEST(CheckSignedHom, EqualsCheck2ecOfSwitchedSource) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t k = 1 + rng() % 4;
    const SignedGraph g = testing::random_signed(n, 0.5, rng);
    const SignedGraph h = testing::random_signed(k, 0.8, rng);
    SignedHom hom{std::vector<Vertex>(n), testing::random_switch(n, rng)};
    for (auto& x : hom.map) x = static_cast<Vertex>(rng() % k);
    const bool lhs = check_signed_hom(g, h, hom);
    EXPECT_EQ(lhs, brute_signed(g, h, hom));
    EXPECT_EQ(lhs, brute_2ec(apply_switch(g, hom.switches), h, hom.map));
    EXPECT_EQ(lhs, check_2ec_hom(apply_switch(g, hom.switches), h, hom.map));
  }
}

TEST(FindSignedHom, Examples) {
  const SignedGraph c4 = testing::make(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {0, 3, N}});
  const SignedGraph k4 = testing::make(4, {{0, 1, P}, {1, 2, P}, {2, 3, P}, {0, 3, N}, {0, 2, P}, {1, 3, N}});
  const auto h = find_signed_hom(c4, k4);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(check_signed_hom(c4, k4, *h));
  EXPECT_TRUE(oracle::hom_exists(c4, k4));

  EXPECT_FALSE(find_signed_hom(edge(P), SignedGraph(1)).has_value());

  const SignedGraph tri = testing::worked_triangle();
  const auto self = find_signed_hom(tri, tri);
  ASSERT_TRUE(self.has_value());
  EXPECT_EQ(self->map, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(self->switches, SwitchSet(3));
}

TEST(FindSignedHom, CliqueObstruction) {
  const SignedGraph k3 = testing::uniform(3, testing::complete_pairs(3), P);
  EXPECT_FALSE(find_signed_hom(k3, edge(P)).has_value());
  EXPECT_FALSE(exhaustive_hom_oracle(k3, edge(P)).has_value());
}

TEST(FindSignedHom, EmptyGraphs) {
  EXPECT_TRUE(find_signed_hom(SignedGraph(0), SignedGraph(0)).has_value());
  EXPECT_TRUE(find_signed_hom(SignedGraph(3), SignedGraph(1)).has_value());
  EXPECT_FALSE(find_signed_hom(SignedGraph(1), SignedGraph(0)).has_value());
}

TEST(FindSignedHom, AgreesWithOracles) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t k = 1 + rng() % 4;
    const SignedGraph g = testing::random_signed(n, 0.6, rng);
    const SignedGraph h = testing::random_signed(k, 0.7, rng);
    const auto found = find_signed_hom(g, h);
    const auto exhaustive = exhaustive_hom_oracle(g, h);
    EXPECT_EQ(found.has_value(), exhaustive.has_value());
    EXPECT_EQ(found.has_value(), oracle::hom_exists(g, h));
    if (found) EXPECT_TRUE(brute_signed(g, h, *found));
    if (exhaustive) EXPECT_TRUE(brute_signed(g, h, *exhaustive));
  }
}

TEST(FindSignedHom, SwitchingInvariance) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + rng() % 5;
    const SignedGraph g = testing::random_signed(n, 0.6, rng);
    const SignedGraph h = testing::random_signed(2 + rng() % 3, 0.8, rng);
    const SignedGraph gs = apply_switch(g, testing::random_switch(n, rng));
    EXPECT_EQ(find_signed_hom(g, h).has_value(), find_signed_hom(gs, h).has_value());
  }
}

TEST(ExhaustiveOracle, BudgetExceeded) {
  const SignedGraph g(20);
  try {
    exhaustive_hom_oracle(g, SignedGraph(20), 1000);
    FAIL() << "expected budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
}

}  // namespace
}  // namespace sgh
