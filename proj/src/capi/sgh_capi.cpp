#include "sgh/sgh.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "sgh/embed.hpp"
#include "sgh/error.hpp"
#include "sgh/hom.hpp"
#include "sgh/io.hpp"
#include "sgh/signed_graph.hpp"
#include "sgh/target.hpp"

struct sgh_graph {
  sgh::SignedGraph value;
};

struct sgh_hom {
  sgh::SignedHom value;
};

struct sgh_cert {
  sgh::TargetCertificate value;
};

namespace {

thread_local std::string g_last_error;

sgh_status set_error(sgh_status status, const std::string& what) {
  g_last_error = what;
  return status;
}

sgh_status from_code(sgh::ErrorCode code) {
  switch (code) {
    case sgh::ErrorCode::InvalidArgument: return SGH_ERR_INVALID_ARGUMENT;
    case sgh::ErrorCode::Parse: return SGH_ERR_PARSE;
    case sgh::ErrorCode::Io: return SGH_ERR_IO;
    case sgh::ErrorCode::BudgetExceeded: return SGH_ERR_BUDGET;
    case sgh::ErrorCode::EmbedStuck: return SGH_ERR_EMBED_STUCK;
    case sgh::ErrorCode::ConstructionFailed: return SGH_NOT_FOUND;
  }
  return SGH_ERR_INTERNAL;
}

template <class F>
sgh_status guarded(F&& f) noexcept {
  try {
    return f();
  } catch (const sgh::Error& e) {
    return set_error(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(SGH_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(SGH_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(SGH_ERR_INTERNAL, "unknown error");
  }
}

sgh_status null_arg(const char* name) {
  return set_error(SGH_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

#define SGH_REQUIRE(ptr)               \
  do {                                 \
    if ((ptr) == nullptr) return null_arg(#ptr); \
  } while (0)

char* dup_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sgh::PropertyOptions property_options(const sgh_property_options* opts) {
  sgh::PropertyOptions out;
  if (opts != nullptr) {
    out.threads = opts->threads == 0 ? 1 : opts->threads;
    out.full_margin = opts->full_margin != 0;
    if (opts->budget != 0) out.budget = opts->budget;
  }
  return out;
}

sgh::Sign to_sign(int s) {
  if (s == SGH_POSITIVE) return sgh::Sign::Positive;
  if (s == SGH_NEGATIVE) return sgh::Sign::Negative;
  sgh::fail(sgh::ErrorCode::InvalidArgument, "sign must be +1 or -1, got " + std::to_string(s));
}

void fill_stats(const sgh::EmbedStats& s, sgh_embed_stats* out) {
  if (out == nullptr) return;
  *out = sgh_embed_stats{};
  out->placements = s.placements;
  out->backtracks = s.backtracks;
  out->guard_violations = s.guard_violations;
  out->min_slack = s.min_slack;
}

}  // namespace

extern "C" {

const char* sgh_last_error(void) { return g_last_error.c_str(); }

const char* sgh_status_name(sgh_status status) {
  switch (status) {
    case SGH_OK: return "ok";
    case SGH_NOT_FOUND: return "not found";
    case SGH_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SGH_ERR_PARSE: return "parse error";
    case SGH_ERR_IO: return "i/o error";
    case SGH_ERR_BUDGET: return "budget exceeded";
    case SGH_ERR_EMBED_STUCK: return "embedding stuck";
    case SGH_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sgh_string_free(char* s) { std::free(s); }

// ---- graphs ---------------------------------------------------------------

sgh_status sgh_graph_from_edges(size_t n, const uint32_t* us, const uint32_t* vs, const int* signs,
                                size_t m, sgh_graph** out) {
  SGH_REQUIRE(out);
  if (m > 0 && (us == nullptr || vs == nullptr || signs == nullptr)) return null_arg("edge arrays");
  return guarded([&] {
    std::vector<sgh::SignedEdge> edges(m);
    for (size_t i = 0; i < m; ++i) edges[i] = {us[i], vs[i], to_sign(signs[i])};
    *out = new sgh_graph{sgh::SignedGraph(n, edges)};
    return SGH_OK;
  });
}

sgh_status sgh_graph_parse(const char* text, sgh_graph** out) {
  SGH_REQUIRE(text);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = new sgh_graph{sgh::parse_signed_graph(text)};
    return SGH_OK;
  });
}

sgh_status sgh_graph_load(const char* path, sgh_graph** out) {
  SGH_REQUIRE(path);
  SGH_REQUIRE(out);
  return guarded([&] {
    const std::string text = sgh::read_file(path);
    try {
      *out = new sgh_graph{sgh::parse_signed_graph(text)};
    } catch (const sgh::Error& e) {
      throw sgh::Error(e.code(), std::string(path) + ": " + e.what());
    }
    return SGH_OK;
  });
}

sgh_status sgh_graph_emit(const sgh_graph* g, char** out) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(sgh::emit_signed_graph(g->value));
    return SGH_OK;
  });
}

sgh_status sgh_graph_save(const sgh_graph* g, const char* path) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(path);
  return guarded([&] {
    sgh::write_file(path, sgh::emit_signed_graph(g->value));
    return SGH_OK;
  });
}

sgh_status sgh_graph_digest(const sgh_graph* g, char** out) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(sgh::graph_digest(g->value));
    return SGH_OK;
  });
}

void sgh_graph_free(sgh_graph* g) { delete g; }

size_t sgh_graph_order(const sgh_graph* g) { return g == nullptr ? 0 : g->value.order(); }

size_t sgh_graph_edge_count(const sgh_graph* g) { return g == nullptr ? 0 : g->value.edge_count(); }

sgh_status sgh_graph_sign(const sgh_graph* g, uint32_t u, uint32_t v, int* sign) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(sign);
  return guarded([&] {
    const auto s = g->value.sign(u, v);
    *sign = s ? static_cast<int>(*s) : 0;
    return SGH_OK;
  });
}

int sgh_graph_equal(const sgh_graph* a, const sgh_graph* b) {
  if (a == nullptr || b == nullptr) return a == b;
  return a->value == b->value ? 1 : 0;
}

sgh_status sgh_graph_get_stats(const sgh_graph* g, sgh_graph_stats* out) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(out);
  return guarded([&] {
    const auto s = sgh::graph_stats(g->value);
    *out = {s.max_degree, s.is_regular ? 1 : 0, s.is_connected ? 1 : 0, s.degeneracy};
    return SGH_OK;
  });
}

sgh_status sgh_switch(const sgh_graph* g, const uint32_t* members, size_t k, sgh_graph** out) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(out);
  if (k > 0 && members == nullptr) return null_arg("members");
  return guarded([&] {
    sgh::SwitchSet s(g->value.order());
    for (size_t i = 0; i < k; ++i) s.insert(members[i]);
    *out = new sgh_graph{sgh::apply_switch(g->value, s)};
    return SGH_OK;
  });
}

sgh_status sgh_switching_equivalent(const sgh_graph* a, const sgh_graph* b,
                                    unsigned char* switch_bits) {
  SGH_REQUIRE(a);
  SGH_REQUIRE(b);
  return guarded([&] {
    const auto s = sgh::switching_equivalent(a->value, b->value);
    if (!s) return SGH_NOT_FOUND;
    if (switch_bits != nullptr) {
      for (sgh::Vertex v = 0; v < a->value.order(); ++v) switch_bits[v] = s->contains(v) ? 1 : 0;
    }
    return SGH_OK;
  });
}

sgh_status sgh_degeneracy_ordering(const sgh_graph* g, size_t d, uint32_t* order_out) {
  SGH_REQUIRE(g);
  return guarded([&] {
    const auto order = sgh::degeneracy_ordering(g->value, d);
    if (!order) return SGH_NOT_FOUND;
    if (order_out != nullptr) std::copy(order->begin(), order->end(), order_out);
    return SGH_OK;
  });
}

sgh_status sgh_random_signed_complete(size_t n, uint64_t seed, sgh_graph** out) {
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = new sgh_graph{sgh::random_signed_complete(n, seed)};
    return SGH_OK;
  });
}

sgh_status sgh_random_bounded_degree_graph(size_t n, size_t delta, int regular, double neg_prob,
                                           uint64_t seed, sgh_graph** out) {
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = new sgh_graph{sgh::random_bounded_degree_graph(n, delta, regular != 0, neg_prob, seed)};
    return SGH_OK;
  });
}

// ---- homomorphisms --------------------------------------------------------

sgh_status sgh_hom_create(size_t n, const uint32_t* map, const unsigned char* switch_bits,
                          sgh_hom** out) {
  SGH_REQUIRE(out);
  if (n > 0 && map == nullptr) return null_arg("map");
  return guarded([&] {
    sgh::SignedHom hom{std::vector<sgh::Vertex>(map, map + n), sgh::SwitchSet(n)};
    for (size_t v = 0; v < n; ++v) {
      if (switch_bits != nullptr && switch_bits[v] != 0) hom.switches.insert(static_cast<sgh::Vertex>(v));
    }
    *out = new sgh_hom{std::move(hom)};
    return SGH_OK;
  });
}

sgh_status sgh_hom_parse(const char* text, sgh_hom** out) {
  SGH_REQUIRE(text);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = new sgh_hom{sgh::parse_hom(text)};
    return SGH_OK;
  });
}

sgh_status sgh_hom_emit(const sgh_hom* h, int verified, char** out) {
  SGH_REQUIRE(h);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(sgh::emit_hom(h->value, verified != 0));
    return SGH_OK;
  });
}

void sgh_hom_free(sgh_hom* h) { delete h; }

size_t sgh_hom_size(const sgh_hom* h) { return h == nullptr ? 0 : h->value.map.size(); }

uint32_t sgh_hom_image(const sgh_hom* h, size_t v) {
  return (h == nullptr || v >= h->value.map.size()) ? 0 : h->value.map[v];
}

int sgh_hom_switched(const sgh_hom* h, size_t v) {
  return (h != nullptr && h->value.switches.contains(static_cast<sgh::Vertex>(v))) ? 1 : 0;
}

sgh_status sgh_check_2ec_hom(const sgh_graph* g, const sgh_graph* h, const uint32_t* map, size_t n,
                             int* valid) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(h);
  SGH_REQUIRE(valid);
  if (n > 0 && map == nullptr) return null_arg("map");
  return guarded([&] {
    *valid = sgh::check_2ec_hom(g->value, h->value, std::span<const uint32_t>(map, n)) ? 1 : 0;
    return SGH_OK;
  });
}

sgh_status sgh_check_signed_hom(const sgh_graph* g, const sgh_graph* h, const sgh_hom* hom,
                                int* valid) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(h);
  SGH_REQUIRE(hom);
  SGH_REQUIRE(valid);
  return guarded([&] {
    *valid = sgh::check_signed_hom(g->value, h->value, hom->value) ? 1 : 0;
    return SGH_OK;
  });
}

sgh_status sgh_find_signed_hom(const sgh_graph* g, const sgh_graph* h, sgh_hom** out) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(h);
  return guarded([&] {
    auto hom = sgh::find_signed_hom(g->value, h->value);
    if (!hom) return SGH_NOT_FOUND;
    if (out != nullptr) *out = new sgh_hom{std::move(*hom)};
    return SGH_OK;
  });
}

sgh_status sgh_exhaustive_hom(const sgh_graph* g, const sgh_graph* h, uint64_t budget,
                              sgh_hom** out) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(h);
  return guarded([&] {
    auto hom = sgh::exhaustive_hom_oracle(g->value, h->value,
                                          budget == 0 ? sgh::kDefaultOracleBudget : budget);
    if (!hom) return SGH_NOT_FOUND;
    if (out != nullptr) *out = new sgh_hom{std::move(*hom)};
    return SGH_OK;
  });
}

sgh_status sgh_chromatic_number(const sgh_graph* g, sgh_chromatic_kind kind, size_t max_order,
                                size_t* value, sgh_graph** target, sgh_hom** hom) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(value);
  return guarded([&] {
    const std::optional<size_t> limit =
        max_order == 0 ? std::nullopt : std::optional<size_t>(max_order);
    auto w = kind == SGH_CHI_2EC ? sgh::two_ec_chromatic_number(g->value, limit)
                                 : sgh::signed_chromatic_number(g->value, limit);
    if (!w) return SGH_NOT_FOUND;
    *value = w->value;
    if (target != nullptr) *target = new sgh_graph{std::move(w->target)};
    if (hom != nullptr) *hom = new sgh_hom{std::move(w->hom)};
    return SGH_OK;
  });
}

// ---- property and targets -------------------------------------------------

sgh_status sgh_has_property(const sgh_graph* c, unsigned t, const sgh_property_options* opts,
                            sgh_property_report* out) {
  SGH_REQUIRE(c);
  return guarded([&] {
    if (t > SGH_MAX_WITNESS) {
      sgh::fail(sgh::ErrorCode::InvalidArgument, "t above " + std::to_string(SGH_MAX_WITNESS));
    }
    const auto r = sgh::has_property_p(c->value, t, property_options(opts));
    if (out != nullptr) {
      *out = sgh_property_report{};
      out->t = r.t;
      out->passed = r.passed ? 1 : 0;
      out->has_witness = r.witness ? 1 : 0;
      out->min_margin = r.min_margin;
      out->checked = r.checked;
      if (r.witness) {
        out->witness_length = r.witness->tuple.size();
        for (size_t i = 0; i < r.witness->tuple.size(); ++i) {
          out->witness_vertices[i] = r.witness->tuple[i];
          out->witness_signs[i] = static_cast<int>(r.witness->signs[i]);
        }
      }
    }
    return r.passed ? SGH_OK : SGH_NOT_FOUND;
  });
}

sgh_status sgh_default_target_order(unsigned t, uint64_t* out) {
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = sgh::default_target_order(t);
    return SGH_OK;
  });
}

sgh_status sgh_construct_target(unsigned t, size_t order, uint64_t seed, uint64_t max_attempts,
                                const sgh_property_options* opts, sgh_graph** graph,
                                sgh_cert** cert) {
  return guarded([&] {
    const std::optional<size_t> n = order == 0 ? std::nullopt : std::optional<size_t>(order);
    auto built = sgh::construct_target(t, n, seed, max_attempts, property_options(opts));
    if (!built) {
      return set_error(SGH_NOT_FOUND, "no graph with the property in " +
                                          std::to_string(max_attempts) + " attempts");
    }
    if (graph != nullptr) *graph = new sgh_graph{std::move(built->graph)};
    if (cert != nullptr) *cert = new sgh_cert{std::move(built->certificate)};
    return SGH_OK;
  });
}

sgh_status sgh_cert_parse(const char* text, sgh_cert** out) {
  SGH_REQUIRE(text);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = new sgh_cert{sgh::parse_certificate(text)};
    return SGH_OK;
  });
}

sgh_status sgh_cert_load(const char* path, sgh_cert** out) {
  SGH_REQUIRE(path);
  SGH_REQUIRE(out);
  return guarded([&] {
    const std::string text = sgh::read_file(path);
    try {
      *out = new sgh_cert{sgh::parse_certificate(text)};
    } catch (const sgh::Error& e) {
      throw sgh::Error(e.code(), std::string(path) + ": " + e.what());
    }
    return SGH_OK;
  });
}

sgh_status sgh_cert_emit(const sgh_cert* cert, char** out) {
  SGH_REQUIRE(cert);
  SGH_REQUIRE(out);
  return guarded([&] {
    *out = dup_string(sgh::emit_certificate(cert->value));
    return SGH_OK;
  });
}

void sgh_cert_free(sgh_cert* cert) { delete cert; }

unsigned sgh_cert_t(const sgh_cert* cert) { return cert == nullptr ? 0 : cert->value.t; }

uint64_t sgh_cert_seed(const sgh_cert* cert) { return cert == nullptr ? 0 : cert->value.seed; }

sgh_status sgh_cert_verify(const sgh_cert* cert, const sgh_graph* graph,
                           const sgh_property_options* opts) {
  SGH_REQUIRE(cert);
  return guarded([&] {
    const auto check = sgh::verify_certificate(cert->value, graph == nullptr ? nullptr : &graph->value,
                                               property_options(opts));
    if (check.ok()) return SGH_OK;
    std::string why;
    if (!check.digest_matches) why += "digest mismatch; ";
    if (!check.graph_matches) why += "graph differs from the certified one; ";
    if (!check.property_holds) why += "property fails; ";
    why.resize(why.size() - 2);
    return set_error(SGH_NOT_FOUND, why);
  });
}

sgh_status sgh_monte_carlo_rate(unsigned t, size_t n, uint64_t trials, uint64_t seed,
                                const sgh_property_options* opts, uint64_t* successes) {
  SGH_REQUIRE(successes);
  return guarded([&] {
    *successes = sgh::monte_carlo_property_rate(t, n, trials, seed, property_options(opts)).successes;
    return SGH_OK;
  });
}

// ---- numeric bounds -------------------------------------------------------

sgh_status sgh_bound_summand_log10(unsigned j, unsigned t, uint64_t c, double* log10_out) {
  SGH_REQUIRE(log10_out);
  return guarded([&] {
    *log10_out = static_cast<double>(sgh::bound_summand_f(j, t, c).log10());
    return SGH_OK;
  });
}

sgh_status sgh_bound_summand_text(unsigned j, unsigned t, uint64_t c, int digits, char** out) {
  SGH_REQUIRE(out);
  return guarded([&] {
    if (digits < 1 || digits > 18) sgh::fail(sgh::ErrorCode::InvalidArgument, "digits must be in 1..18");
    *out = dup_string(sgh::bound_summand_f(j, t, c).scientific(digits));
    return SGH_OK;
  });
}

sgh_status sgh_bad_event_bound_eval(unsigned t, uint64_t c, sgh_bad_event_bound* out) {
  SGH_REQUIRE(out);
  return guarded([&] {
    const auto b = sgh::bad_event_bound(t, c);
    out->sum_log10 = static_cast<double>(b.sum.log10());
    out->closed_form_log10 = static_cast<double>(b.closed_form.log10());
    out->below_one = b.below_one ? 1 : 0;
    out->closed_form_below_one = b.closed_form.below_one() ? 1 : 0;
    out->ratio_condition = b.ratio_condition ? 1 : 0;
    return SGH_OK;
  });
}

sgh_status sgh_bad_event_bound_report(unsigned t, uint64_t c, char** out) {
  SGH_REQUIRE(out);
  return guarded([&] {
    const auto b = sgh::bad_event_bound(t, c);
    std::ostringstream s;
    s << "t " << t << "\n" << "order " << c << "\n";
    for (unsigned j = 0; j < b.summands.size(); ++j) {
      s << "f(" << j << ") " << b.summands[j].scientific(12) << "\n";
    }
    s << "sum " << b.sum.scientific(12) << "\n"
      << "closed_form " << b.closed_form.scientific(12) << "\n"
      << "ratio_condition " << (b.ratio_condition ? "holds" : "fails") << "\n"
      << "sum_below_one " << (b.below_one ? "yes" : "no") << "\n"
      << "closed_form_below_one " << (b.closed_form.below_one() ? "yes" : "no") << "\n";
    *out = dup_string(s.str());
    return SGH_OK;
  });
}

sgh_status sgh_chromatic_bounds(unsigned delta, double* lower, uint64_t* upper) {
  SGH_REQUIRE(lower);
  SGH_REQUIRE(upper);
  return guarded([&] {
    const auto b = sgh::chromatic_bounds(delta);
    *lower = b.lower;
    *upper = b.upper;
    return SGH_OK;
  });
}

// ---- embedding ------------------------------------------------------------

sgh_status sgh_greedy_embed(const sgh_graph* g, const sgh_graph* c, unsigned t, sgh_hom** hom,
                            sgh_embed_stats* stats) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(c);
  SGH_REQUIRE(hom);
  return guarded([&] {
    auto r = sgh::greedy_embed(g->value, c->value, t);
    fill_stats(r.stats, stats);
    *hom = new sgh_hom{std::move(r.hom)};
    return SGH_OK;
  });
}

sgh_status sgh_embed_regular_fix(const sgh_graph* g, const sgh_graph* c, unsigned t, sgh_hom** hom,
                                 sgh_graph** augmented, sgh_embed_stats* stats) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(c);
  SGH_REQUIRE(hom);
  return guarded([&] {
    auto r = sgh::embed_with_regular_fix(g->value, c->value, t);
    fill_stats(r.stats, stats);
    if (stats != nullptr) {
      stats->regular_fix = 1;
      stats->removed_u = r.removed_edge.u;
      stats->removed_v = r.removed_edge.v;
    }
    *hom = new sgh_hom{std::move(r.hom)};
    if (augmented != nullptr) *augmented = new sgh_graph{std::move(r.target.graph)};
    return SGH_OK;
  });
}

sgh_status sgh_pipeline(const sgh_graph* g, uint64_t seed, const sgh_property_options* opts,
                        const sgh_graph* cached_target, const sgh_cert* cached_cert, sgh_hom** hom,
                        sgh_graph** target, sgh_cert** cert, sgh_embed_stats* stats) {
  SGH_REQUIRE(g);
  SGH_REQUIRE(hom);
  if ((cached_target == nullptr) != (cached_cert == nullptr)) {
    return set_error(SGH_ERR_INVALID_ARGUMENT, "cached target and certificate must be given together");
  }
  return guarded([&] {
    sgh::PipelineOptions popts;
    popts.property = property_options(opts);
    std::optional<sgh::ConstructedTarget> cached;
    if (cached_target != nullptr) {
      cached = sgh::ConstructedTarget{cached_target->value, cached_cert->value};
      popts.cached_target = &*cached;
    }
    auto r = sgh::end_to_end(g->value, seed, popts);
    fill_stats(r.stats, stats);
    if (stats != nullptr && r.removed_edge) {
      stats->regular_fix = 1;
      stats->removed_u = r.removed_edge->u;
      stats->removed_v = r.removed_edge->v;
    }
    *hom = new sgh_hom{std::move(r.hom)};
    if (target != nullptr) *target = new sgh_graph{std::move(r.target)};
    if (cert != nullptr) *cert = new sgh_cert{std::move(r.certificate)};
    return SGH_OK;
  });
}

}  // extern "C"
