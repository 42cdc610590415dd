/* C interface to the spectral semidistance toolkit.
 *
 * All functions return a status code (SS_OK on success); a human-readable
 * message for the last failure on the calling thread is available through
 * ss_last_error(). Handles are opaque and owned by the caller via the
 * matching *_free function.
 */
#ifndef SEMISPEC_H
#define SEMISPEC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    SS_OK = 0,
    SS_ERR_COMPUTE = 1,   /* numerical failure (singularity, non-convergence, ...) */
    SS_ERR_INPUT = 2      /* malformed input, bad option, dimension mismatch */
};

typedef struct ss_mat ss_mat;
typedef struct ss_result ss_result;

/* Message describing the most recent failure on this thread. */
const char* ss_last_error(void);

/* entries: n*n complex values, row-major, interleaved re,im (2*n*n doubles). */
int ss_mat_create(int n, const double* entries, ss_mat** out);
int ss_mat_dim(const ss_mat* m);
int ss_mat_get(const ss_mat* m, int i, int j, double* re, double* im);
void ss_mat_free(ss_mat* m);

/* Pair file format: {"a": {"n": N, "data": [[[re,im],...],...]}, "b": {...}}. */
int ss_pair_from_json(const char* text, ss_mat** a, ss_mat** b);

/* Built-in example pairs: "free-algebra", "l1" (n = truncation level),
 * "random" (n = dimension, seeded). zero_radius_hint (may be NULL) receives
 * the builder's suggested zero-cluster radius, or 0 when none applies. */
int ss_example_pair(const char* name, int n, unsigned long long seed, double gap, ss_mat** a,
                    ss_mat** b, double* zero_radius_hint);

/* options_json keys (all optional):
 *   "method":        "definition" | "geometric" | "charf" | "growth" | "all"
 *   "n_max":         commutator sequence length (default 400)
 *   "norm":          "fro" | "one" | "inf"
 *   "nodes_cap":     contour quadrature node cap (default 512)
 *   "cluster_tol":   eigenvalue clustering tolerance
 *   "product_tol":   absolute threshold for p*q != 0 decisions
 *   "zero_radius":   zero-cluster radius (enables the charf route)
 *   "qe":            request the quasinilpotent-equivalence verdict
 *   "qe_tol":        matching tolerance for the QE decision
 * Pass NULL or "{}" for defaults. */
int ss_run(const ss_mat* a, const ss_mat* b, const char* options_json, ss_result** out);

/* Borrowed pointers, valid until ss_result_free. */
const char* ss_result_json(const ss_result* r);
const char* ss_result_csv(ss_result* r, const char* table); /* sequence|spectra|wset */
int ss_result_fragile(const ss_result* r);
void ss_result_free(ss_result* r);

#ifdef __cplusplus
}
#endif

#endif /* SEMISPEC_H */
