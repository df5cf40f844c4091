/* C interface to the gincoh library.
 *
 * Objects are opaque handles. Every call that can fail returns a
 * gincoh_status; on failure gincoh_last_error(ctx) describes the problem.
 * Strings handed out by the library (all JSON documents) must be released
 * with gincoh_string_free. */
#ifndef GINCOH_H
#define GINCOH_H

#include <stdint.h>

#if defined(_WIN32)
#define GINCOH_API __declspec(dllexport)
#else
#define GINCOH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gincoh_context gincoh_context;
typedef struct gincoh_ideal gincoh_ideal;
typedef struct gincoh_complex gincoh_complex;

/* Values match gincoh::ErrorCode. */
typedef enum gincoh_status {
  GINCOH_OK = 0,
  GINCOH_E_PARSE = 1,
  GINCOH_E_INVALID_ARGUMENT = 2,
  GINCOH_E_AMBIENT_MISMATCH = 3,
  GINCOH_E_CAPACITY = 4,
  GINCOH_E_SINGULAR_MATRIX = 5,
  GINCOH_E_GENERICITY = 6,
  GINCOH_E_NOT_STRONGLY_STABLE = 7,
  GINCOH_E_NOT_SQUAREFREE = 8,
  GINCOH_E_AMBIENT_GROWTH = 9,
  GINCOH_E_INCONSISTENT = 10,
  GINCOH_E_WINDOW_INSTABILITY = 11,
  GINCOH_E_IO = 12,
  GINCOH_E_INTERNAL = 13
} gincoh_status;

typedef enum gincoh_route {
  GINCOH_ROUTE_FILTRATION = 0, /* gin + dimension filtration (ideals only) */
  GINCOH_ROUTE_CECH = 1,       /* multigraded Cech oracle (monomial input) */
  GINCOH_ROUTE_ENRICO = 2,     /* closed formula from the dual's Betti numbers, with oracle diff */
  GINCOH_ROUTE_ENRICO_PRINTED = 3
} gincoh_route;

/* Inclusive degree range; pass NULL for the default window. */
typedef struct gincoh_window {
  int lo;
  int hi;
} gincoh_window;

GINCOH_API const char* gincoh_version(void);
GINCOH_API const char* gincoh_status_name(gincoh_status status);

GINCOH_API gincoh_status gincoh_context_new(gincoh_context** out);
GINCOH_API void gincoh_context_free(gincoh_context* ctx);
GINCOH_API const char* gincoh_last_error(const gincoh_context* ctx);
GINCOH_API gincoh_status gincoh_context_set_seed(gincoh_context* ctx, uint64_t seed);
/* The seed in use; drawn from std::random_device on first use if never set. */
GINCOH_API gincoh_status gincoh_context_get_seed(gincoh_context* ctx, uint64_t* out);
/* NULL or "" clears the directory (the GINCOH_CACHE_DIR variable still applies). */
GINCOH_API gincoh_status gincoh_context_set_cache_dir(gincoh_context* ctx, const char* dir);

GINCOH_API gincoh_status gincoh_ideal_from_json(gincoh_context* ctx, const char* json, gincoh_ideal** out);
GINCOH_API gincoh_status gincoh_ideal_to_json(gincoh_context* ctx, const gincoh_ideal* ideal, char** out);
GINCOH_API void gincoh_ideal_free(gincoh_ideal* ideal);

GINCOH_API gincoh_status gincoh_complex_from_json(gincoh_context* ctx, const char* json, gincoh_complex** out);
GINCOH_API gincoh_status gincoh_complex_to_json(gincoh_context* ctx, const gincoh_complex* complex, char** out);
GINCOH_API void gincoh_complex_free(gincoh_complex* complex);

/* Stanley-Reisner ideal and its inverse (squarefree monomial ideals only). */
GINCOH_API gincoh_status gincoh_complex_ideal(gincoh_context* ctx, const gincoh_complex* complex, gincoh_ideal** out);
GINCOH_API gincoh_status gincoh_ideal_complex(gincoh_context* ctx, const gincoh_ideal* ideal, gincoh_complex** out);

GINCOH_API gincoh_status gincoh_gin(gincoh_context* ctx, const gincoh_ideal* ideal, char** out);
GINCOH_API gincoh_status gincoh_hilbert(gincoh_context* ctx, const gincoh_ideal* ideal, gincoh_window window, char** out);
GINCOH_API gincoh_status gincoh_betti_ideal(gincoh_context* ctx, const gincoh_ideal* ideal, int use_oracle, char** out);
GINCOH_API gincoh_status gincoh_betti_complex(gincoh_context* ctx, const gincoh_complex* complex, int use_oracle,
                                              char** out);
GINCOH_API gincoh_status gincoh_localcoh_ideal(gincoh_context* ctx, const gincoh_ideal* ideal, gincoh_route route,
                                               const gincoh_window* window, char** out);
GINCOH_API gincoh_status gincoh_localcoh_complex(gincoh_context* ctx, const gincoh_complex* complex,
                                                 gincoh_route route, const gincoh_window* window, char** out);
GINCOH_API gincoh_status gincoh_filtration(gincoh_context* ctx, const gincoh_ideal* ideal, char** out);
GINCOH_API gincoh_status gincoh_dual(gincoh_context* ctx, const gincoh_complex* complex, gincoh_complex** out);
GINCOH_API gincoh_status gincoh_shift(gincoh_context* ctx, const gincoh_complex* complex, char** out);
GINCOH_API gincoh_status gincoh_seqcm(gincoh_context* ctx, const gincoh_complex* complex, char** out);

/* The verify calls fill *out with the report even when they return
 * GINCOH_E_INCONSISTENT because the report records a violated invariant. */
GINCOH_API gincoh_status gincoh_verify_main_theorem(gincoh_context* ctx, const gincoh_ideal* ideal,
                                                    const gincoh_window* window, char** out);
GINCOH_API gincoh_status gincoh_verify_thm41(gincoh_context* ctx, const gincoh_complex* complex,
                                             const gincoh_window* window, char** out);
/* Runs the acceptance suite over <dir>/ideals and <dir>/complexes. */
GINCOH_API gincoh_status gincoh_verify_corpus(gincoh_context* ctx, const char* dir, char** out);

/* TSV rendering of a Betti, cohomology or Hilbert table, or of any document
 * carrying one under "table". */
GINCOH_API gincoh_status gincoh_render_tsv(gincoh_context* ctx, const char* json, char** out);

GINCOH_API void gincoh_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
