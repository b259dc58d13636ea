/* C interface of the shellfill library: exact chain calculus for 2-chains
 * with 1-shell boundaries over circular rotation structures.
 *
 * All functions return a status code (SF_OK on success); outputs go through
 * pointers. Strings returned through char** are owned by the caller and must
 * be released with sf_string_free. Chains are opaque handles bound to a
 * rotation order n.
 */
#ifndef SHELLFILL_C_H
#define SHELLFILL_C_H

#ifdef __cplusplus
extern "C" {
#endif

#define SF_OK 0
#define SF_ERR_ARG 1          /* invalid argument or parameter */
#define SF_ERR_PARSE 2        /* malformed input text */
#define SF_ERR_PRECONDITION 3 /* operation preconditions violated */
#define SF_ERR_BUDGET 4       /* bounded search gave no verdict */
#define SF_ERR_INTERNAL 5

#define SF_KIND_NONRENAMEABLE 0
#define SF_KIND_RENAMEABLE 1

#define SF_MINIMAL_NO 0
#define SF_MINIMAL_YES 1
#define SF_MINIMAL_UNKNOWN 2

typedef struct sf_chain sf_chain;

/* Message for the most recent failure on this thread. */
const char* sf_last_error(void);

void sf_string_free(char* text);

/* --- shell parameters ------------------------------------------------- */

/* k4 = k2 - (k1 - k3) mod n. */
int sf_shell_offset(int n, int k1, int k2, int k3, int* out_k4);

/* Exact minimal fill length min{2(n-k4)-1, 2k4+1}. */
int sf_min_fill_length(int n, int k1, int k2, int k3, int* out_len);

/* Least odd fill length <= max_len by integer feasibility; -1 when absent. */
int sf_search_fill_arith(int n, int k1, int k2, int k3, int max_len, int* out_len);

/* Least odd fill length <= max_len by exhaustive grid search; -1 absent. */
int sf_search_fill_grid(int n, int k1, int k2, int k3, int max_len, int* out_len);

/* Whether every shell bounds a chain of length <= 3. When it fails,
 * out_witness receives the least failing (k1,k2,k3) and out_witness_len its
 * minimal fill length. */
int sf_weak_three_amalgamation(int n, int* out_holds, int out_witness[3], int* out_witness_len);

/* --- shells and fills -------------------------------------------------- */

/* Shell for the spec, serialized as a chain JSON document. */
int sf_build_shell(int n, int k1, int k2, int k3, char** out_json);

/* Explicit minimal fill of the spec's shell. */
int sf_construct_fill(int n, int k1, int k2, int k3, char** out_json, int* out_len,
                      int* out_boundary_ok);

/* Fill by the step-distance construction, from a spec or a serialized shell. */
int sf_lascar_fill(int n, int k1, int k2, int k3, char** out_json, int* out_len,
                   int* out_boundary_ok);
int sf_lascar_fill_shell(int n, const char* shell_json, char** out_json, int* out_len,
                         int* out_boundary_ok);

/* --- chains ------------------------------------------------------------ */

int sf_chain_parse(int n, const char* json, sf_chain** out);
void sf_chain_free(sf_chain* chain);
int sf_chain_to_json(const sf_chain* chain, char** out_json);
int sf_chain_length(const sf_chain* chain, long long* out_len);

/* 1 iff the boundary of the chain is a 1-shell. */
int sf_chain_has_shell_boundary(const sf_chain* chain, int* out);

/* SF_KIND_* classification; requires a 1-shell boundary. */
int sf_chain_classify(const sf_chain* chain, int* out_kind);

/* SF_MINIMAL_* verdict within the given search budget. */
int sf_chain_minimal(const sf_chain* chain, long long budget, int* out_verdict);

/* Standard form of a minimal renameable chain, as chain JSON. */
int sf_chain_standard_form(const sf_chain* chain, long long budget, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* SHELLFILL_C_H */
