#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "sgh/sgh.h"

namespace {

struct GraphDeleter {
  void operator()(sgh_graph* g) const { sgh_graph_free(g); }
};
struct HomDeleter {
  void operator()(sgh_hom* h) const { sgh_hom_free(h); }
};
struct CertDeleter {
  void operator()(sgh_cert* c) const { sgh_cert_free(c); }
};
using Graph = std::unique_ptr<sgh_graph, GraphDeleter>;
using Hom = std::unique_ptr<sgh_hom, HomDeleter>;
using Cert = std::unique_ptr<sgh_cert, CertDeleter>;

Graph parse(const char* text) {
  sgh_graph* g = nullptr;
  EXPECT_EQ(sgh_graph_parse(text, &g), SGH_OK) << sgh_last_error();
  return Graph(g);
}

std::string take(char* s) {
  std::string out(s == nullptr ? "" : s);
  sgh_string_free(s);
  return out;
}

const char* kUnbalanced = "sg 3 3\n0 1 +\n0 2 +\n1 2 -\n";
const char* kPositive = "sg 3 3\n0 1 +\n0 2 +\n1 2 +\n";
const char* kWorked = "sg 3 3\n0 1 +\n0 2 -\n1 2 -\n";

TEST(CApi, GraphLifecycle) {
  const uint32_t us[] = {1, 0};
  const uint32_t vs[] = {2, 1};
  const int signs[] = {SGH_NEGATIVE, SGH_POSITIVE};
  sgh_graph* raw = nullptr;
  ASSERT_EQ(sgh_graph_from_edges(3, us, vs, signs, 2, &raw), SGH_OK);
  Graph g(raw);
  EXPECT_EQ(sgh_graph_order(g.get()), 3U);
  EXPECT_EQ(sgh_graph_edge_count(g.get()), 2U);
  int s = 0;
  EXPECT_EQ(sgh_graph_sign(g.get(), 2, 1, &s), SGH_OK);
  EXPECT_EQ(s, SGH_NEGATIVE);
  EXPECT_EQ(sgh_graph_sign(g.get(), 0, 2, &s), SGH_OK);
  EXPECT_EQ(s, 0);
  char* text = nullptr;
  ASSERT_EQ(sgh_graph_emit(g.get(), &text), SGH_OK);
  EXPECT_EQ(take(text), "sg 3 2\n0 1 +\n1 2 -\n");
  char* digest = nullptr;
  ASSERT_EQ(sgh_graph_digest(g.get(), &digest), SGH_OK);
  EXPECT_EQ(take(digest).size(), 64U);
}

TEST(CApi, ErrorsCarryMessages) {
  sgh_graph* g = nullptr;
  EXPECT_EQ(sgh_graph_parse("sg 2 1\n0 0 +\n", &g), SGH_ERR_PARSE);
  EXPECT_EQ(g, nullptr);
  EXPECT_NE(std::string(sgh_last_error()).find("loop"), std::string::npos);
  const int bad_sign[] = {0};
  const uint32_t u[] = {0}, v[] = {1};
  EXPECT_EQ(sgh_graph_from_edges(2, u, v, bad_sign, 1, &g), SGH_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(sgh_graph_load("/nonexistent/x.sg", &g), SGH_ERR_IO);
  EXPECT_EQ(sgh_graph_parse(nullptr, &g), SGH_ERR_INVALID_ARGUMENT);
  EXPECT_STREQ(sgh_status_name(SGH_ERR_EMBED_STUCK), "embedding stuck");
}

TEST(CApi, SwitchingAndEquivalence) {
  Graph pos = parse(kPositive);
  Graph worked = parse(kWorked);
  const uint32_t members[] = {2};
  sgh_graph* sw = nullptr;
  ASSERT_EQ(sgh_switch(pos.get(), members, 1, &sw), SGH_OK);
  Graph switched(sw);
  EXPECT_TRUE(sgh_graph_equal(switched.get(), worked.get()));
  unsigned char bits[3] = {9, 9, 9};
  EXPECT_EQ(sgh_switching_equivalent(pos.get(), worked.get(), bits), SGH_OK);
  EXPECT_TRUE((bits[0] == 0 && bits[1] == 0 && bits[2] == 1) || (bits[0] == 1 && bits[1] == 1 && bits[2] == 0));
  Graph unb = parse(kUnbalanced);
  EXPECT_EQ(sgh_switching_equivalent(pos.get(), unb.get(), bits), SGH_NOT_FOUND);
}

TEST(CApi, StatsAndDegeneracy) {
  Graph k4 = parse("sg 4 6\n0 1 +\n0 2 +\n0 3 +\n1 2 +\n1 3 +\n2 3 +\n");
  sgh_graph_stats st{};
  ASSERT_EQ(sgh_graph_get_stats(k4.get(), &st), SGH_OK);
  EXPECT_EQ(st.max_degree, 3U);
  EXPECT_TRUE(st.is_regular);
  EXPECT_EQ(st.degeneracy, 3U);
  uint32_t order[4];
  EXPECT_EQ(sgh_degeneracy_ordering(k4.get(), 2, order), SGH_NOT_FOUND);
  EXPECT_EQ(sgh_degeneracy_ordering(k4.get(), 3, order), SGH_OK);
}

TEST(CApi, Homomorphisms) {
  Graph unb = parse(kUnbalanced);
  Graph pos = parse(kPositive);
  sgh_hom* h = nullptr;
  EXPECT_EQ(sgh_find_signed_hom(unb.get(), pos.get(), &h), SGH_NOT_FOUND);
  EXPECT_EQ(sgh_exhaustive_hom(unb.get(), pos.get(), 0, &h), SGH_NOT_FOUND);
  Graph worked = parse(kWorked);
  ASSERT_EQ(sgh_find_signed_hom(worked.get(), pos.get(), &h), SGH_OK);
  Hom hom(h);
  int valid = 0;
  ASSERT_EQ(sgh_check_signed_hom(worked.get(), pos.get(), hom.get(), &valid), SGH_OK);
  EXPECT_EQ(valid, 1);
  char* text = nullptr;
  ASSERT_EQ(sgh_hom_emit(hom.get(), 1, &text), SGH_OK);
  sgh_hom* back = nullptr;
  ASSERT_EQ(sgh_hom_parse(take(text).c_str(), &back), SGH_OK);
  Hom parsed(back);
  ASSERT_EQ(sgh_hom_size(parsed.get()), 3U);
  for (size_t v = 0; v < 3; ++v) {
    EXPECT_EQ(sgh_hom_image(parsed.get(), v), sgh_hom_image(hom.get(), v));
    EXPECT_EQ(sgh_hom_switched(parsed.get(), v), sgh_hom_switched(hom.get(), v));
  }
  const uint32_t id[] = {0, 1, 2};
  EXPECT_EQ(sgh_check_2ec_hom(worked.get(), pos.get(), id, 3, &valid), SGH_OK);
  EXPECT_EQ(valid, 0);
  EXPECT_EQ(sgh_check_2ec_hom(worked.get(), pos.get(), id, 2, &valid), SGH_ERR_INVALID_ARGUMENT);
  const unsigned char bits[] = {0, 0, 1};
  sgh_hom* made = nullptr;
  ASSERT_EQ(sgh_hom_create(3, id, bits, &made), SGH_OK);
  Hom manual(made);
  EXPECT_EQ(sgh_check_signed_hom(worked.get(), pos.get(), manual.get(), &valid), SGH_OK);
  EXPECT_EQ(valid, 1);
}

TEST(CApi, ChromaticNumbers) {
  Graph unb = parse(kUnbalanced);
  size_t value = 0;
  sgh_graph* target = nullptr;
  sgh_hom* hom = nullptr;
  ASSERT_EQ(sgh_chromatic_number(unb.get(), SGH_CHI_SIGNED, 0, &value, &target, &hom), SGH_OK);
  Graph t(target);
  Hom h(hom);
  EXPECT_EQ(value, 3U);
  int valid = 0;
  EXPECT_EQ(sgh_check_signed_hom(unb.get(), t.get(), h.get(), &valid), SGH_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_EQ(sgh_chromatic_number(unb.get(), SGH_CHI_SIGNED, 2, &value, nullptr, nullptr), SGH_NOT_FOUND);
  ASSERT_EQ(sgh_chromatic_number(unb.get(), SGH_CHI_2EC, 0, &value, nullptr, nullptr), SGH_OK);
  EXPECT_EQ(value, 3U);
}

TEST(CApi, PropertyAndTargets) {
  Graph k4 = parse("sg 4 6\n0 1 -\n0 2 +\n0 3 +\n1 2 +\n1 3 +\n2 3 -\n");
  sgh_property_report rep{};
  EXPECT_EQ(sgh_has_property(k4.get(), 2, nullptr, &rep), SGH_OK);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.min_margin, 1);
  Graph unb = parse(kUnbalanced);
  EXPECT_EQ(sgh_has_property(unb.get(), 2, nullptr, &rep), SGH_NOT_FOUND);
  ASSERT_TRUE(rep.has_witness);
  EXPECT_EQ(rep.witness_length, 1U);
  EXPECT_EQ(rep.witness_vertices[0], 0U);
  EXPECT_EQ(rep.witness_signs[0], SGH_NEGATIVE);

  uint64_t order = 0;
  EXPECT_EQ(sgh_default_target_order(3, &order), SGH_OK);
  EXPECT_EQ(order, 48U);

  sgh_property_options opts{2, 0, 0};
  sgh_graph* g = nullptr;
  sgh_cert* c = nullptr;
  ASSERT_EQ(sgh_construct_target(3, 0, 19, 100, &opts, &g, &c), SGH_OK);
  Graph target(g);
  Cert cert(c);
  EXPECT_EQ(sgh_cert_t(cert.get()), 3U);
  EXPECT_EQ(sgh_cert_seed(cert.get()), 19U);
  EXPECT_EQ(sgh_cert_verify(cert.get(), target.get(), nullptr), SGH_OK);
  EXPECT_EQ(sgh_cert_verify(cert.get(), k4.get(), nullptr), SGH_NOT_FOUND);
  char* text = nullptr;
  ASSERT_EQ(sgh_cert_emit(cert.get(), &text), SGH_OK);
  sgh_cert* again = nullptr;
  ASSERT_EQ(sgh_cert_parse(take(text).c_str(), &again), SGH_OK);
  Cert parsed(again);
  EXPECT_EQ(sgh_cert_verify(parsed.get(), target.get(), nullptr), SGH_OK);

  EXPECT_EQ(sgh_construct_target(3, 3, 1, 5, nullptr, &g, &c), SGH_NOT_FOUND);

  uint64_t successes = 0;
  EXPECT_EQ(sgh_monte_carlo_rate(2, 8, 50, 1, nullptr, &successes), SGH_OK);
  EXPECT_GT(successes, 25U);
}

TEST(CApi, Bounds) {
  double lower = 0;
  uint64_t upper = 0;
  ASSERT_EQ(sgh_chromatic_bounds(4, &lower, &upper), SGH_OK);
  EXPECT_DOUBLE_EQ(lower, 2.0);
  EXPECT_EQ(upper, 74U);
  EXPECT_EQ(sgh_chromatic_bounds(1, &lower, &upper), SGH_ERR_INVALID_ARGUMENT);
  sgh_bad_event_bound b{};
  ASSERT_EQ(sgh_bad_event_bound_eval(3, 48, &b), SGH_OK);
  EXPECT_FALSE(b.below_one);
  EXPECT_TRUE(b.ratio_condition);
  EXPECT_NEAR(b.sum_log10, std::log10(1.35900267038), 1e-9);
  double f0 = 0;
  ASSERT_EQ(sgh_bound_summand_log10(0, 3, 48, &f0), SGH_OK);
  EXPECT_NEAR(f0, std::log10(2.0 * 48 * 48) - 48 / std::log(10.0), 1e-12);
  char* text = nullptr;
  ASSERT_EQ(sgh_bound_summand_text(0, 3, 48, 6, &text), SGH_OK);
  EXPECT_EQ(take(text), "6.56716e-18");
  ASSERT_EQ(sgh_bad_event_bound_report(3, 48, &text), SGH_OK);
  EXPECT_NE(take(text).find("closed_form"), std::string::npos);
}

TEST(CApi, EmbeddingAndPipeline) {
  sgh_graph* g = nullptr;
  sgh_cert* c = nullptr;
  ASSERT_EQ(sgh_construct_target(3, 48, 5, 100, nullptr, &g, &c), SGH_OK);
  Graph target(g);
  Cert cert(c);

  sgh_graph* src = nullptr;
  ASSERT_EQ(sgh_random_bounded_degree_graph(20, 3, 0, 0.5, 3, &src), SGH_OK);
  Graph sparse(src);
  sgh_hom* h = nullptr;
  sgh_embed_stats stats{};
  ASSERT_EQ(sgh_greedy_embed(sparse.get(), target.get(), 3, &h, &stats), SGH_OK) << sgh_last_error();
  Hom hom(h);
  int valid = 0;
  EXPECT_EQ(sgh_check_signed_hom(sparse.get(), target.get(), hom.get(), &valid), SGH_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_EQ(stats.placements, 20U);

  Graph k4 = parse("sg 4 6\n0 1 +\n0 2 +\n0 3 +\n1 2 +\n1 3 +\n2 3 +\n");
  EXPECT_EQ(sgh_greedy_embed(k4.get(), target.get(), 3, &h, &stats), SGH_ERR_INVALID_ARGUMENT);
  sgh_graph* aug = nullptr;
  ASSERT_EQ(sgh_embed_regular_fix(k4.get(), target.get(), 3, &h, &aug, &stats), SGH_OK);
  Hom fix(h);
  Graph augmented(aug);
  EXPECT_EQ(sgh_graph_order(augmented.get()), 50U);
  EXPECT_TRUE(stats.regular_fix);
  EXPECT_EQ(sgh_check_signed_hom(k4.get(), augmented.get(), fix.get(), &valid), SGH_OK);
  EXPECT_EQ(valid, 1);

  sgh_graph* out_target = nullptr;
  ASSERT_EQ(sgh_pipeline(k4.get(), 0, nullptr, target.get(), cert.get(), &h, &out_target, nullptr, &stats),
            SGH_OK);
  Hom piped(h);
  Graph piped_target(out_target);
  EXPECT_EQ(sgh_graph_order(piped_target.get()), 50U);
  EXPECT_EQ(sgh_check_signed_hom(k4.get(), piped_target.get(), piped.get(), &valid), SGH_OK);
  EXPECT_EQ(valid, 1);
  EXPECT_EQ(sgh_pipeline(k4.get(), 0, nullptr, target.get(), nullptr, &h, nullptr, nullptr, nullptr),
            SGH_ERR_INVALID_ARGUMENT);
}

TEST(CApi, RandomGenerators) {
  sgh_graph* a = nullptr;
  sgh_graph* b = nullptr;
  ASSERT_EQ(sgh_random_signed_complete(10, 4, &a), SGH_OK);
  ASSERT_EQ(sgh_random_signed_complete(10, 4, &b), SGH_OK);
  Graph ga(a), gb(b);
  EXPECT_TRUE(sgh_graph_equal(ga.get(), gb.get()));
  EXPECT_EQ(sgh_graph_edge_count(ga.get()), 45U);
  EXPECT_EQ(sgh_random_bounded_degree_graph(5, 3, 1, 0.5, 1, &a), SGH_ERR_INVALID_ARGUMENT);
}

}  // namespace
