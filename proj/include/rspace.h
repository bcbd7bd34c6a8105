/* rspace: degenerate principal series structure on the non-unital
 * irreducible symmetric R-spaces, in exact rational arithmetic.
 *
 * C API: opaque handles + status codes; every result crosses the boundary
 * as a heap-allocated JSON or text string owned by the caller (release with
 * rsp_string_free). Rationals are serialized as "num/den" strings.
 */
#ifndef RSPACE_H
#define RSPACE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rsp_status {
  RSP_OK = 0,
  /* violated mathematical precondition (bad parameters, irreducible nu
   * where a series is required, insufficient truncation, ...) */
  RSP_ERR_DOMAIN = 1,
  /* malformed textual input */
  RSP_ERR_USAGE = 2,
  /* internal failure (allocation, invariant breach) */
  RSP_ERR_INTERNAL = 3
} rsp_status;

/* Opaque handle for one case (family + parameters). */
typedef struct rsp_case rsp_case_t;

/* Version string of the library, static storage. */
const char* rsp_version(void);

/* Thread-local message describing the last error returned on this thread;
 * static storage, valid until the next failing call. */
const char* rsp_last_error(void);

/* --- case construction ------------------------------------------------ */

/* Parses "sl(r=2,s=5,R)", "so(r=3,split)", "so(r=2,C)", "e6(6)", "e6(C)",
 * "e6(-26)". On success *out owns the handle (release with rsp_case_free). */
rsp_status rsp_case_parse(const char* text, rsp_case_t** out);
void rsp_case_free(rsp_case_t* c);

/* {family, params, name, n, p, r, d, e, b}. */
rsp_status rsp_case_json(const rsp_case_t* c, char** out_json);

/* Symbolic table of all eight families (constants as printed formulas). */
rsp_status rsp_family_table_json(char** out_json);

/* --- structure queries -------------------------------------------------
 * nu grammar everywhere: "p/q" | "p" (real rational), "i" (purely
 * imaginary), "generic" (non-real, not purely imaginary).
 * box < 0 requests the default truncation (smallest sufficient bound + 2).
 */

/* A(m,k), B(m,k), C(m) direct and closed, the zero-locus flag, and the
 * Casimir/shift data of the K-type m (comma-separated entries). */
rsp_status rsp_coeffs_json(const rsp_case_t* c, const char* m_csv,
                           char** out_json);

/* Reducibility of I(nu): witnesses and the composition chain summary. */
rsp_status rsp_reduce_json(const rsp_case_t* c, const char* nu,
                           char** out_json);

/* Composition series with the graph cross-check: closed-form chain, SCC
 * condensation layers on the box, agreement flag. verify_graph = 0 skips
 * the graph work. */
rsp_status rsp_compose_json(const rsp_case_t* c, const char* nu, long box,
                            int verify_graph, char** out_json);

/* Graphviz rendering of the transition graph on the box. */
rsp_status rsp_compose_dot(const rsp_case_t* c, const char* nu, long box,
                           char** out_dot);

/* Unitarity: with nu != NULL, per-constituent verdicts at that parameter;
 * with nu == NULL, the case's full classification of unitarizable
 * constituents (spectra evaluated up to the box). */
rsp_status rsp_unitary_json(const rsp_case_t* c, const char* nu, long box,
                            char** out_json);

/* GK dimension, minimal-orbit dimension, associated-variety verdict for
 * rep in {"principal", "small"}. */
rsp_status rsp_gkdim_json(const rsp_case_t* c, const char* rep,
                          char** out_json);

/* Identity oracle: trials per branch with the given seed, plus the
 * Lagrange-vanishing sweep and the coefficient-consistency sweep. */
rsp_status rsp_verify_json(long trials, unsigned long long seed,
                           char** out_json);

/* Releases any string returned through an out parameter. */
void rsp_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RSPACE_H */
