/* mdim — exact resolving-set computations on cylinder products, H(n) and L(n).
 *
 * C interface to the shared library. All functions that can fail return an
 * mdim_status; a human-readable detail for the most recent failure on the
 * calling thread is available via mdim_last_error(). Strings returned through
 * out-parameters are heap-allocated and must be released with
 * mdim_string_free(); graphs with mdim_graph_free().
 */
#ifndef MDIM_H
#define MDIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mdim_status {
    MDIM_OK = 0,
    MDIM_ERR_BAD_PARAMETER = 1,  /* parameter outside a constructor's range   */
    MDIM_ERR_PARSE = 2,          /* malformed spec, edge list or set literal  */
    MDIM_ERR_DISCONNECTED = 3,   /* distances requested on a disconnected graph */
    MDIM_ERR_EMPTY_SET = 4,      /* predicate needs a non-empty set           */
    MDIM_ERR_SET_TOO_SMALL = 5,  /* doubly-resolving check needs >= 2 members */
    MDIM_ERR_NOT_A_BIJECTION = 6,
    MDIM_ERR_BAD_PARAMS = 7,     /* named set / claim parameters out of range */
    MDIM_ERR_UNKNOWN_CLAIM = 8,
    MDIM_ERR_IO = 9,
    MDIM_ERR_INTERNAL = 10
} mdim_status;

/* Opaque graph handle. Wraps the graph, its family metadata (when built from
 * a family spec) and a lazily computed distance matrix. */
typedef struct mdim_graph mdim_graph;

const char *mdim_version(void);
const char *mdim_status_name(mdim_status status);
const char *mdim_last_error(void);

/* Family specs: "cycle:n=7", "path:k=3", "cp:n=5,k=3", "cpm:n=5,k=4,m=4",
 * "h:n=6", "l:n=5". */
mdim_status mdim_graph_build(const char *family_spec, mdim_graph **out);
mdim_status mdim_graph_from_edge_list(const char *text, mdim_graph **out);
mdim_status mdim_graph_from_file(const char *path, mdim_graph **out);
mdim_status mdim_graph_to_edge_list(const mdim_graph *g, char **out_text);
void mdim_graph_free(mdim_graph *g);
void mdim_string_free(char *s);

size_t mdim_graph_vertex_count(const mdim_graph *g);
size_t mdim_graph_edge_count(const mdim_graph *g);
mdim_status mdim_graph_vertex_label(const mdim_graph *g, size_t v, char **out);
mdim_status mdim_graph_distance(const mdim_graph *g, size_t u, size_t v,
                                unsigned *out);

/* kind is one of "resolving", "doubly", "strong".
 * Set literals are comma-separated member tokens: "x3", "x16:4" (copy 4),
 * "v2", "v1v3", "w2:1.2" ({v2,v1v2} in L(n)), "@7" (0-based index), or an
 * exact vertex label. Result is a JSON object; on a negative verdict it
 * carries the first violating pair. */
mdim_status mdim_check(const mdim_graph *g, const char *kind,
                       const char *set_literal, int with_timing,
                       char **out_json);

/* Exact minimum-size search. budget = 0 selects the built-in default
 * (100000000 candidate evaluations). Result JSON: kind, size, witness,
 * certificate_checked, optimal, method, nodes_explored[, elapsed_ms]. */
mdim_status mdim_solve(const mdim_graph *g, const char *kind, uint64_t budget,
                       unsigned jobs, int with_timing, char **out_json);

/* Named witness sets ("D1", "A2", "E", "T", "R1", "R2", "P", "P4", "C2", ...)
 * resolved against the graph's family labeling. out_json lists members. */
mdim_status mdim_named_set(const mdim_graph *g, const char *set_spec,
                           char **out_json);

/* Representation table: one line "r(<label>|<SET>) = (…)" per vertex. */
mdim_status mdim_table(const mdim_graph *g, const char *set_spec,
                       char **out_text);

/* Claim registry (JSON array of {id,title,family,slow}). */
mdim_status mdim_claims_list(char **out_json);

/* Run claims. id = NULL or "" runs the whole registry; otherwise an exact id
 * or an id prefix ("Thm3.1" also selects "Thm3.1-A", never "Thm3.10").
 * params = NULL or "n=9,k=3" overrides the claim's default parameters.
 * Emits one JSON object per line in out_jsonl. */
mdim_status mdim_claims_run(const char *id, const char *params,
                            uint64_t budget, unsigned jobs, int include_slow,
                            int with_timing, char **out_jsonl,
                            int *out_fail_count, int *out_skip_count);

#ifdef __cplusplus
}
#endif

#endif /* MDIM_H */
