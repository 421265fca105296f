/* C interface to the quantum matrix calculus engine.
 *
 * All computation is exact over Q(q). Handles are opaque; every char**
 * output is heap-allocated and must be released with qmx_string_free.
 * Functions return QMX_OK on success; on any error the return code
 * classifies it and qmx_last_error() carries the message (thread-local).
 * Verification reports are JSON; a failed check is NOT an error: the call
 * returns QMX_OK with *all_pass == 0.
 */
#ifndef QMX_H
#define QMX_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmx_status {
  QMX_OK = 0,
  QMX_ERR_PARSE = 1,   /* bad expression / literal / options */
  QMX_ERR_DOMAIN = 2,  /* precondition violated (ranges, poles, q0 = +-1) */
  QMX_ERR_INTERNAL = 3 /* invariant violation inside the engine */
} qmx_status;

typedef struct qmx_engine qmx_engine;

const char* qmx_version(void);
const char* qmx_last_error(void);
void qmx_string_free(char* s);

/* Engine for the calculus on Mat(m, n)_q; builds and caches the rewrite
 * system, embeddings, and derived action tables. */
qmx_status qmx_engine_new(int m, int n, qmx_engine** out);
void qmx_engine_free(qmx_engine* e);

/* Normal form / differential of an expression in t[a,alpha], dt[a,alpha]. */
qmx_status qmx_normal_form(qmx_engine* e, const char* expr, char** out);
qmx_status qmx_differential(qmx_engine* e, const char* expr, char** out);

/* Flatness table (JSON report). inject_drop != 0 removes one relation from
 * the rule derivation but not from the oracle (negative control). */
qmx_status qmx_hilbert(qmx_engine* e, int maxdeg, long long oracle_cap, int inject_drop,
                       char** json_out, int* all_pass);

/* Hecke + braid verification of the size-N symmetry (JSON report).
 * inject_flip != 0 negates one entry first (negative control). */
qmx_status qmx_rhat(int N, int inject_flip, char** json_out, int* all_pass);

/* Pairing of a polynomial in u[i,j] against a U_q sl_N word. */
qmx_status qmx_pair(int N, const char* func_expr, const char* word, char** out);

/* Quantum minor expansion; cols is a comma-separated increasing list. */
qmx_status qmx_minor(int m, int n, const char* cols_csv, char** out);

/* Derive the action table at probe cutoff L; returns the table and the
 * rewrite rules as JSON (golden-file formats). */
qmx_status qmx_derive_action(qmx_engine* e, int L, char** action_json, char** rules_json);

/* Run a verification suite: hopf | embed | module-algebra | grading |
 * uniqueness. options_json may set maxdeg, L, L1, L2, D, kmax, oracle_cap,
 * q0 (string), inject (string); pass NULL or "{}" for defaults. */
qmx_status qmx_verify(qmx_engine* e, const char* suite, const char* options_json,
                      char** json_report, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif
