/*
 * wondermodels — C interface to the wonderful-model combinatorics engine.
 *
 * Conventions
 *   - Every function returns a wm_status; WM_OK means success.
 *   - On failure, wm_last_error() describes the problem. The message is
 *     thread-local and valid until the next call on the same thread.
 *   - Results are returned as NUL-terminated UTF-8 JSON strings written to
 *     `char** out`; release them with wm_string_free(). Schemas are listed in
 *     docs/schemas.md.
 *   - Handles are opaque; free them with the matching *_free function.
 *     Passing NULL to a *_free function is a no-op.
 *   - A NULL context means default settings (safety limits on, one job).
 */
#ifndef WONDERMODELS_H
#define WONDERMODELS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WM_BUILDING_LIBRARY)
#    define WM_API __declspec(dllexport)
#  else
#    define WM_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define WM_API __attribute__((visibility("default")))
#else
#  define WM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wm_status {
  WM_OK = 0,
  WM_ERR_INVALID_ARGUMENT = 1, /* bad parameter, NULL pointer, precondition */
  WM_ERR_PARSE = 2,            /* malformed graph/list/JSON text */
  WM_ERR_VALIDATION = 3,       /* well-formed input violating a domain rule */
  WM_ERR_LIMIT = 4,            /* safety bound exceeded (see wm_context_set_unsafe) */
  WM_ERR_INTERNAL = 5          /* bug or resource exhaustion */
} wm_status;

typedef enum wm_side {
  WM_SIDE_TORIC = 1,
  WM_SIDE_HYPER = 2,
  WM_SIDE_BOTH = 3
} wm_side;

typedef struct wm_context wm_context;
typedef struct wm_graph wm_graph;

WM_API const char* wm_version(void);
WM_API const char* wm_last_error(void);
WM_API const char* wm_status_name(wm_status status);
WM_API void wm_string_free(char* s);

/* ---- context ---------------------------------------------------------- */

WM_API wm_status wm_context_new(wm_context** out);
WM_API void wm_context_free(wm_context* ctx);
/* Non-zero lifts the safety bounds (n <= 9 vertices, l <= 9 for
 * permutation sweeps, n + m <= 7 for special-forest enumeration). */
WM_API wm_status wm_context_set_unsafe(wm_context* ctx, int unsafe);
/* Worker threads for sweeps; output never depends on this value. */
WM_API wm_status wm_context_set_jobs(wm_context* ctx, int jobs);

/* ---- graphs ----------------------------------------------------------- */

/* JSON {"n":N,"edges":[[i,j],...]} (optional "labels") or a family string:
 * complete:N, path:N, cycle:N, edgeless:N, disjoint-complete:N,M,
 * cone:<family>. */
WM_API wm_status wm_graph_parse(const char* text, wm_graph** out);
WM_API wm_status wm_graph_cone(const wm_graph* g, wm_graph** out);
WM_API void wm_graph_free(wm_graph* g);
WM_API wm_status wm_graph_to_json(const wm_graph* g, char** out);
WM_API wm_status wm_graph_order(const wm_graph* g, int* out);

/* ---- lattice and building sets ----------------------------------------- */

/* Connected partitions with codimensions. */
WM_API wm_status wm_poset(const wm_context* ctx, const wm_graph* g, char** out);
/* Building set in the ambient matching g (torus, or coned linear space when
 * g contains the apex 0). */
WM_API wm_status wm_building(const wm_context* ctx, const wm_graph* g, char** out);
/* Nested sets; the list is included when include_sets is non-zero. */
WM_API wm_status wm_nested(const wm_context* ctx, const wm_graph* g, int include_sets, char** out);
/* Admissible functions and their degree distribution. */
WM_API wm_status wm_admissible(const wm_context* ctx, const wm_graph* g, int include_functions, char** out);
/* order_spec: "inclusion", "toric" or a JSON array of blocks. *ok receives
 * 1 when every prefix is building. */
WM_API wm_status wm_check_order(const wm_context* ctx, const wm_graph* g, const char* order_spec, char** out,
                                int* ok);
/* Intersection lattice of the edge hyperplanes vs the partition poset. */
WM_API wm_status wm_verify_lattice(const wm_context* ctx, const wm_graph* g, char** out, int* ok);

/* ---- Poincaré polynomials ---------------------------------------------- */

/* For a base graph g: toric model of g and/or hyperplane model of cone(g).
 * For a cone graph (apex 0): only WM_SIDE_HYPER on g itself. */
WM_API wm_status wm_poincare(const wm_context* ctx, const wm_graph* g, wm_side side, char** out);
/* Coefficients of one side into buf; *len receives the coefficient count
 * (also when cap is too small, which yields WM_ERR_INVALID_ARGUMENT). */
WM_API wm_status wm_poincare_coeffs(const wm_context* ctx, const wm_graph* g, wm_side side, int64_t* buf,
                                    size_t cap, size_t* len);
/* Toric model of g vs hyperplane model of cone(g). The JSON is replayable:
 * it carries the graph and both polynomials. *equal receives the verdict. */
WM_API wm_status wm_verify_iso(const wm_context* ctx, const wm_graph* g, char** out, int* equal);

/* ---- permutations ------------------------------------------------------- */

WM_API wm_status wm_eulerian(const wm_context* ctx, int l, char** out);
/* list: comma-separated distinct positive integers, e.g. "3,1,2". */
WM_API wm_status wm_lec(const wm_context* ctx, const char* list, char** out);
WM_API wm_status wm_lec_distribution(const wm_context* ctx, int l, char** out);
/* values: comma-separated increasing integers; i in 1..count-1. */
WM_API wm_status wm_hook(const wm_context* ctx, const char* values, int i, char** out);

/* ---- forests and the bijection ----------------------------------------- */

/* triple_json: {"f1":[...],"f2":[...],"sigma":[...]}. */
WM_API wm_status wm_bijection(const wm_context* ctx, const char* triple_json, char** out);
/* special_json: {"n":n,"m":m,"forest":[...]}. */
WM_API wm_status wm_bijection_inverse(const wm_context* ctx, const char* special_json, char** out);
/* Exhaustive round trip and cardinality check when n, m <= 3, otherwise
 * `trials` random round trips from `seed`. */
WM_API wm_status wm_bijection_check(const wm_context* ctx, int n, int m, uint64_t seed, int trials, char** out,
                                    int* ok);
WM_API wm_status wm_special_forests(const wm_context* ctx, int n, int m, int include_list, char** out);

/* ---- series -------------------------------------------------------------- */

/* lambda(q,t) up to t^order. */
WM_API wm_status wm_lambda(const wm_context* ctx, int order, char** out);
/* Phi^T and Phi^H to orders (nx, ny). With check != 0 also compares them,
 * compares each cell with the Poincaré polynomial of K_n + K_m and runs the
 * lec identity up to l = nx + ny - 1; *ok receives the verdict. */
WM_API wm_status wm_series(const wm_context* ctx, int nx, int ny, int check, char** out, int* ok);

/* ---- everything ------------------------------------------------------- */

/* Runs the verification battery (model and lattice isomorphisms for n <= 5,
 * building orders, lec identity, series, bijection). */
WM_API wm_status wm_verify_all(const wm_context* ctx, char** out, int* ok);

#ifdef __cplusplus
}
#endif

#endif /* WONDERMODELS_H */
