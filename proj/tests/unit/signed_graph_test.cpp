#include <gtest/gtest.h>

#include "sgh/error.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/vertex_set.hpp"
#include "support/graphs.hpp"

namespace sgh {
namespace {

using testing::N;
using testing::P;

TEST(VertexSet, InsertEraseAcrossWords) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3U);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_FALSE(s.contains(500));
  s.erase(64);
  EXPECT_EQ(s.to_vector(), (std::vector<Vertex>{0, 129}));
  EXPECT_EQ(s.first(), Vertex{0});
}

TEST(VertexSet, ComplementStaysInsideUniverse) {
  VertexSet s(70);
  s.insert(3);
  const VertexSet c = s.complement();
  EXPECT_EQ(c.size(), 69U);
  EXPECT_FALSE(c.contains(3));
  EXPECT_EQ(VertexSet::full(70), s | c);
  EXPECT_TRUE((s & c).empty());
}

TEST(VertexSet, SetAlgebra) {
  VertexSet a(10), b(10);
  for (Vertex v : {1, 2, 3}) a.insert(v);
  for (Vertex v : {3, 4}) b.insert(v);
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ((a ^ b).to_vector(), (std::vector<Vertex>{1, 2, 4}));
  EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{3}));
  EXPECT_FALSE(VertexSet(5).first().has_value());
}

TEST(SignedGraph, BasicAccessors) {
  const SignedGraph g = testing::worked_triangle();
  EXPECT_EQ(g.order(), 3U);
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_EQ(g.sign(0, 1), P);
  EXPECT_EQ(g.sign(2, 0), N);
  EXPECT_TRUE(g.is_complete());
  EXPECT_EQ(g.degree(1), 2U);
  EXPECT_EQ(g.neighbors(0, N).to_vector(), (std::vector<Vertex>{2}));
}

TEST(SignedGraph, EdgesAreNormalisedAndSorted) {
  const SignedGraph g = testing::make(4, {{3, 1, N}, {2, 0, P}, {1, 0, P}});
  const std::vector<SignedEdge> expected{{0, 1, P}, {0, 2, P}, {1, 3, N}};
  EXPECT_EQ(g.edges(), expected);
  EXPECT_FALSE(g.sign(2, 3).has_value());
}

TEST(SignedGraph, RejectsMalformedEdges) {
  EXPECT_THROW(testing::make(2, {{0, 2, P}}), Error);
  EXPECT_THROW(testing::make(2, {{1, 1, P}}), Error);
  EXPECT_THROW(testing::make(3, {{0, 1, P}, {1, 0, N}}), Error);
  try {
    testing::make(2, {{0, 0, P}});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
  }
}

TEST(SignedGraph, WithoutEdgeAndInduced) {
  const SignedGraph k4 = testing::uniform(4, testing::complete_pairs(4), P);
  const SignedGraph minus = k4.without_edge(0, 1);
  EXPECT_EQ(minus.edge_count(), 5U);
  EXPECT_FALSE(minus.adjacent(0, 1));
  EXPECT_TRUE(minus.same_underlying(testing::uniform(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, N)));
  EXPECT_THROW(k4.without_edge(0, 0), Error);

  const std::vector<Vertex> keep{3, 1};
  const SignedGraph sub = testing::worked_triangle().induced(std::vector<Vertex>{2, 1});
  EXPECT_EQ(sub.order(), 2U);
  EXPECT_EQ(sub.sign(0, 1), N);
  EXPECT_EQ(k4.induced(keep).edge_count(), 1U);
}

TEST(SignedGraph, EqualityComparesSigns) {
  EXPECT_EQ(testing::worked_triangle(), testing::worked_triangle());
  EXPECT_NE(testing::worked_triangle(), testing::unbalanced_triangle());
  EXPECT_TRUE(testing::worked_triangle().same_underlying(testing::unbalanced_triangle()));
}

TEST(Sign, Arithmetic) {
  EXPECT_EQ(N * N, P);
  EXPECT_EQ(P * N, N);
  EXPECT_EQ(flip(P), N);
  EXPECT_EQ(switch_factor(true), N);
  EXPECT_EQ(sign_char(N), '-');
}

TEST(SwitchSet, RangeChecked) {
  SwitchSet s(3);
  EXPECT_THROW(s.insert(3), Error);
  s.insert(1);
  s.toggle(2);
  EXPECT_EQ(s.size(), 2U);
  EXPECT_EQ(s.factor(1), N);
  EXPECT_EQ(s.factor(0), P);
  EXPECT_EQ(s.complement(), SwitchSet(3, {0}));
  EXPECT_EQ(s ^ SwitchSet(3, {1}), SwitchSet(3, {2}));
}

}  // namespace
}  // namespace sgh
