/*
 * C interface to the signed-graph homomorphism library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every function returns an sgh_status; on any
 * status >= SGH_ERR_INVALID_ARGUMENT a description is available from
 * sgh_last_error() on the calling thread until the next failing call.
 * Strings returned through char** are heap-allocated and released with
 * sgh_string_free.
 */
#ifndef SGH_SGH_H
#define SGH_SGH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SGH_BUILDING_LIBRARY)
#    define SGH_API __declspec(dllexport)
#  else
#    define SGH_API __declspec(dllimport)
#  endif
#else
#  define SGH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgh_status {
  SGH_OK = 0,
  /* The query ran and found nothing: no homomorphism, not equivalent,
   * property fails, value above the requested maximum, attempts exhausted. */
  SGH_NOT_FOUND = 1,
  SGH_ERR_INVALID_ARGUMENT = 2,
  SGH_ERR_PARSE = 3,
  SGH_ERR_IO = 4,
  SGH_ERR_BUDGET = 5,
  SGH_ERR_EMBED_STUCK = 6,
  SGH_ERR_INTERNAL = 7
} sgh_status;

typedef enum sgh_sign { SGH_NEGATIVE = -1, SGH_POSITIVE = 1 } sgh_sign;

typedef struct sgh_graph sgh_graph;
typedef struct sgh_hom sgh_hom;
typedef struct sgh_cert sgh_cert;

SGH_API const char* sgh_last_error(void);
SGH_API const char* sgh_status_name(sgh_status status);
SGH_API void sgh_string_free(char* s);

/* ---- graphs ----------------------------------------------------------- */

/* signs[i] is SGH_POSITIVE or SGH_NEGATIVE. */
SGH_API sgh_status sgh_graph_from_edges(size_t n, const uint32_t* us, const uint32_t* vs,
                                        const int* signs, size_t m, sgh_graph** out);
SGH_API sgh_status sgh_graph_parse(const char* text, sgh_graph** out);
SGH_API sgh_status sgh_graph_load(const char* path, sgh_graph** out);
SGH_API sgh_status sgh_graph_emit(const sgh_graph* g, char** out);
SGH_API sgh_status sgh_graph_save(const sgh_graph* g, const char* path);
SGH_API sgh_status sgh_graph_digest(const sgh_graph* g, char** out);
SGH_API void sgh_graph_free(sgh_graph* g);

SGH_API size_t sgh_graph_order(const sgh_graph* g);
SGH_API size_t sgh_graph_edge_count(const sgh_graph* g);
/* *sign is 0 when u and v are not adjacent. */
SGH_API sgh_status sgh_graph_sign(const sgh_graph* g, uint32_t u, uint32_t v, int* sign);
SGH_API int sgh_graph_equal(const sgh_graph* a, const sgh_graph* b);

typedef struct sgh_graph_stats {
  size_t max_degree;
  int is_regular;
  int is_connected;
  size_t degeneracy;
} sgh_graph_stats;

SGH_API sgh_status sgh_graph_get_stats(const sgh_graph* g, sgh_graph_stats* out);

/* members: k vertex ids to re-sign. */
SGH_API sgh_status sgh_switch(const sgh_graph* g, const uint32_t* members, size_t k,
                              sgh_graph** out);

/* SGH_OK with switch_bits[v] = 0/1 (caller buffer of sgh_graph_order(a)
 * bytes) when b is a re-signing of a, SGH_NOT_FOUND otherwise. */
SGH_API sgh_status sgh_switching_equivalent(const sgh_graph* a, const sgh_graph* b,
                                            unsigned char* switch_bits);

/* SGH_OK with order_out filled (caller buffer of sgh_graph_order(g)
 * entries), SGH_NOT_FOUND when g is not d-degenerate. */
SGH_API sgh_status sgh_degeneracy_ordering(const sgh_graph* g, size_t d, uint32_t* order_out);

SGH_API sgh_status sgh_random_signed_complete(size_t n, uint64_t seed, sgh_graph** out);
SGH_API sgh_status sgh_random_bounded_degree_graph(size_t n, size_t delta, int regular,
                                                   double neg_prob, uint64_t seed,
                                                   sgh_graph** out);

/* ---- homomorphisms ---------------------------------------------------- */

SGH_API sgh_status sgh_hom_create(size_t n, const uint32_t* map,
                                  const unsigned char* switch_bits, sgh_hom** out);
SGH_API sgh_status sgh_hom_parse(const char* text, sgh_hom** out);
SGH_API sgh_status sgh_hom_emit(const sgh_hom* h, int verified, char** out);
SGH_API void sgh_hom_free(sgh_hom* h);
SGH_API size_t sgh_hom_size(const sgh_hom* h);
SGH_API uint32_t sgh_hom_image(const sgh_hom* h, size_t v);
SGH_API int sgh_hom_switched(const sgh_hom* h, size_t v);

/* *valid receives 1 or 0. */
SGH_API sgh_status sgh_check_2ec_hom(const sgh_graph* g, const sgh_graph* h,
                                     const uint32_t* map, size_t n, int* valid);
SGH_API sgh_status sgh_check_signed_hom(const sgh_graph* g, const sgh_graph* h,
                                        const sgh_hom* hom, int* valid);
SGH_API sgh_status sgh_find_signed_hom(const sgh_graph* g, const sgh_graph* h, sgh_hom** out);
/* budget 0 selects the default. */
SGH_API sgh_status sgh_exhaustive_hom(const sgh_graph* g, const sgh_graph* h, uint64_t budget,
                                      sgh_hom** out);

typedef enum sgh_chromatic_kind { SGH_CHI_SIGNED = 0, SGH_CHI_2EC = 1 } sgh_chromatic_kind;

/* max_order 0 means the order of g. target and hom may be NULL. */
SGH_API sgh_status sgh_chromatic_number(const sgh_graph* g, sgh_chromatic_kind kind,
                                        size_t max_order, size_t* value, sgh_graph** target,
                                        sgh_hom** hom);

/* ---- property P_{t-1} and targets ------------------------------------ */

#define SGH_MAX_WITNESS 64

typedef struct sgh_property_options {
  unsigned threads;   /* 0 or 1: single-threaded */
  int full_margin;    /* nonzero: scan everything for the exact minimum margin */
  uint64_t budget;    /* 0: default */
} sgh_property_options;

typedef struct sgh_property_report {
  unsigned t;
  int passed;
  int has_witness;
  size_t witness_length;
  uint32_t witness_vertices[SGH_MAX_WITNESS];
  int witness_signs[SGH_MAX_WITNESS];
  int64_t min_margin;
  uint64_t checked;
} sgh_property_report;

/* SGH_OK when the property holds, SGH_NOT_FOUND when it fails. opts may be NULL. */
SGH_API sgh_status sgh_has_property(const sgh_graph* c, unsigned t,
                                    const sgh_property_options* opts,
                                    sgh_property_report* out);

SGH_API sgh_status sgh_default_target_order(unsigned t, uint64_t* out);

/* order 0 selects the default order. SGH_NOT_FOUND after max_attempts. */
SGH_API sgh_status sgh_construct_target(unsigned t, size_t order, uint64_t seed,
                                        uint64_t max_attempts, const sgh_property_options* opts,
                                        sgh_graph** graph, sgh_cert** cert);

SGH_API sgh_status sgh_cert_parse(const char* text, sgh_cert** out);
SGH_API sgh_status sgh_cert_load(const char* path, sgh_cert** out);
SGH_API sgh_status sgh_cert_emit(const sgh_cert* cert, char** out);
SGH_API void sgh_cert_free(sgh_cert* cert);
SGH_API unsigned sgh_cert_t(const sgh_cert* cert);
SGH_API uint64_t sgh_cert_seed(const sgh_cert* cert);

/* SGH_OK when digest, property and (if graph is non-NULL) graph identity all
 * check out, SGH_NOT_FOUND otherwise. */
SGH_API sgh_status sgh_cert_verify(const sgh_cert* cert, const sgh_graph* graph,
                                   const sgh_property_options* opts);

SGH_API sgh_status sgh_monte_carlo_rate(unsigned t, size_t n, uint64_t trials, uint64_t seed,
                                        const sgh_property_options* opts, uint64_t* successes);

/* ---- numeric bounds --------------------------------------------------- */

/* Values that may under- or overflow a double are returned as log10. */
SGH_API sgh_status sgh_bound_summand_log10(unsigned j, unsigned t, uint64_t c, double* log10_out);
/* Scientific rendering with `digits` significant digits. */
SGH_API sgh_status sgh_bound_summand_text(unsigned j, unsigned t, uint64_t c, int digits,
                                          char** out);

typedef struct sgh_bad_event_bound {
  double sum_log10;
  double closed_form_log10;
  int below_one;
  int closed_form_below_one;
  int ratio_condition;
} sgh_bad_event_bound;

SGH_API sgh_status sgh_bad_event_bound_eval(unsigned t, uint64_t c, sgh_bad_event_bound* out);
/* Multi-line report of every summand, the sum and the closed form. */
SGH_API sgh_status sgh_bad_event_bound_report(unsigned t, uint64_t c, char** out);

SGH_API sgh_status sgh_chromatic_bounds(unsigned delta, double* lower, uint64_t* upper);

/* ---- embedding -------------------------------------------------------- */

typedef struct sgh_embed_stats {
  size_t placements;
  size_t backtracks;
  size_t guard_violations;
  size_t min_slack;
  int regular_fix;
  uint32_t removed_u;
  uint32_t removed_v;
} sgh_embed_stats;

SGH_API sgh_status sgh_greedy_embed(const sgh_graph* g, const sgh_graph* c, unsigned t,
                                    sgh_hom** hom, sgh_embed_stats* stats);
SGH_API sgh_status sgh_embed_regular_fix(const sgh_graph* g, const sgh_graph* c, unsigned t,
                                         sgh_hom** hom, sgh_graph** augmented,
                                         sgh_embed_stats* stats);
/* cached_target/cached_cert may both be NULL; otherwise both are required.
 * target and cert outputs may be NULL. */
SGH_API sgh_status sgh_pipeline(const sgh_graph* g, uint64_t seed,
                                const sgh_property_options* opts,
                                const sgh_graph* cached_target, const sgh_cert* cached_cert,
                                sgh_hom** hom, sgh_graph** target, sgh_cert** cert,
                                sgh_embed_stats* stats);

#ifdef __cplusplus
}
#endif

#endif /* SGH_SGH_H */
