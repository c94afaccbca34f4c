/*
 * infdex -- exact multivariate-spline and distribution calculus for torus
 * action models, with numerical finite-s verification oracles.
 *
 * C API of the shared library. All structured data crosses this boundary as
 * JSON text (rationals encoded as integers or "p/q" strings); handles are
 * opaque. Every function returns an infdex_status; on failure a thread-local
 * message is available via infdex_last_error(). Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * infdex_string_free().
 */

#ifndef INFDEX_INFDEX_H
#define INFDEX_INFDEX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define INFDEX_API __declspec(dllexport)
#else
#define INFDEX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum infdex_status {
    INFDEX_OK = 0,
    INFDEX_ERR_CHECK_FAILED = 1,  /* a verification suite reported failures */
    INFDEX_ERR_INVALID_INPUT = 2, /* malformed file / JSON / argument */
    INFDEX_ERR_PRECONDITION = 3,  /* mathematical precondition violated */
    INFDEX_ERR_INTERNAL = 5
} infdex_status;

typedef struct infdex_spline infdex_spline; /* built spline form T_X */
typedef struct infdex_dist infdex_dist;     /* distribution on g* */

INFDEX_API const char* infdex_version(void);

/* Message describing the most recent failure on this thread. */
INFDEX_API const char* infdex_last_error(void);

INFDEX_API void infdex_string_free(char* s);

/* ---- splines ---------------------------------------------------------- */

/* weights_json: {"dim": n, "weights": [[...], ...]} */
INFDEX_API infdex_status infdex_spline_build(const char* weights_json, infdex_spline** out);

/* Re-ingest a previously exported spline form (validates against a rebuild). */
INFDEX_API infdex_status infdex_spline_from_json(const char* splineform_json,
                                                 infdex_spline** out);

INFDEX_API infdex_status infdex_spline_to_json(const infdex_spline* s, char** json_out);

/* point: comma-separated rationals, e.g. "3/2,1". Result: {"value": "p/q"}. */
INFDEX_API infdex_status infdex_spline_eval(const infdex_spline* s, const char* point,
                                            char** result_json);

/* Laplace transform at a dual-positive rational z; exact. Result:
 * {"value": "p/q", "closedForm": "p/q", "equal": true}. */
INFDEX_API infdex_status infdex_spline_laplace(const infdex_spline* s, const char* z,
                                               char** result_json);

/* CSV evaluation grid over an axis box; on-wall points get an empty value
 * cell. box: "x0,x1;y0,y1;..." (rational bounds), steps per axis. */
INFDEX_API infdex_status infdex_spline_grid(const infdex_spline* s, const char* box,
                                            uint32_t steps, char** csv_out);

INFDEX_API void infdex_spline_free(infdex_spline* s);

/* ---- distributions ----------------------------------------------------- */

INFDEX_API infdex_status infdex_dist_from_json(const char* json, infdex_dist** out);
INFDEX_API infdex_status infdex_dist_to_json(const infdex_dist* d, char** json_out);

/* The closed-form infinitesimal index of a catalog model. */
INFDEX_API infdex_status infdex_model_index(const char* model_json, infdex_dist** out);

INFDEX_API infdex_status infdex_dist_tensor(const infdex_dist* a, const infdex_dist* b,
                                            infdex_dist** out);
INFDEX_API infdex_status infdex_dist_convolve(const infdex_dist* a, const infdex_dist* b,
                                              infdex_dist** out);

/* map_json: {"entries": [[...], ...]} rows of the projection matrix. */
INFDEX_API infdex_status infdex_dist_pushforward(const infdex_dist* d, const char* map_json,
                                                 infdex_dist** out);

/* splitting_json: right inverse of the projection. apply_index_prefactor != 0
 * multiplies by i^(dim G - dim L). */
INFDEX_API infdex_status infdex_dist_induce(const infdex_dist* d, const char* map_json,
                                            const char* splitting_json,
                                            int apply_index_prefactor, infdex_dist** out);

/* Pairing against a test function (JSON spec, {"gaussian":...} or
 * {"bump":...}). Result: {"re", "im", "err", "prefactor": {...}}. */
INFDEX_API infdex_status infdex_dist_pair(const infdex_dist* d, const char* testfn_json,
                                          uint64_t seed, uint64_t samples, char** result_json);

/* Exact density value at an off-wall point. Result:
 * {"coeff": "p/q", "prefactor": {...}, "re", "im"}. */
INFDEX_API infdex_status infdex_dist_eval_density(const infdex_dist* d, const char* point,
                                                  char** result_json);

INFDEX_API void infdex_dist_free(infdex_dist* d);

/* ---- oracles and verification ------------------------------------------ */

/* Finite-s pairing of a model against a test function. cutoff_json:
 * {"R0": 1.0} (optional, default 1). poly_json: optional polynomial class P.
 * Result: {"re", "im", "err", "s"}. */
INFDEX_API infdex_status infdex_model_finite_s(const char* model_json, const char* testfn_json,
                                               double s, const char* cutoff_json,
                                               const char* poly_json, uint64_t seed,
                                               uint64_t samples, char** result_json);

/* Run a verification suite: laplace|oracle|stabilize|cutoff|restriction|
 * induction|invariants|all. Returns INFDEX_OK only if every check passed
 * (INFDEX_ERR_CHECK_FAILED otherwise; the report is still written). */
INFDEX_API infdex_status infdex_verify(const char* suite, uint64_t seed, uint64_t samples,
                                       double tol, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* INFDEX_INFDEX_H */
