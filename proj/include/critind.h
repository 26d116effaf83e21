/* C interface for the critind graph-analysis library.
 *
 * All functions returning critind_status report failure through the
 * status code; critind_last_error() then holds a message for the
 * calling thread. Handles are freed with their matching _free call;
 * strings returned through char** outputs are freed with
 * critind_string_free.
 */
#ifndef CRITIND_H
#define CRITIND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum critind_status {
    CRITIND_OK = 0,
    CRITIND_ERR_PARSE = 1,
    CRITIND_ERR_INVALID_ARGUMENT = 2,
    CRITIND_ERR_BUDGET_EXCEEDED = 3,
    CRITIND_ERR_IO = 4,
    CRITIND_ERR_INTERNAL = 5
} critind_status;

typedef enum critind_format {
    CRITIND_FORMAT_EDGE_LIST = 0,
    CRITIND_FORMAT_DIMACS = 1
} critind_format;

const char* critind_version(void);
const char* critind_status_name(critind_status s);
/* Message from the most recent failing call on this thread. */
const char* critind_last_error(void);

void critind_string_free(char* s);

/* ---- graphs ---- */

typedef struct critind_graph critind_graph;

critind_status critind_graph_from_edge_list(const char* text, critind_graph** out);
critind_status critind_graph_from_dimacs(const char* text, critind_graph** out);
critind_status critind_graph_from_file(const char* path, critind_format fmt,
                                       critind_graph** out);
critind_status critind_graph_fixture(const char* name, critind_graph** out);
critind_status critind_graph_gnp(uint32_t n, double p, uint64_t seed,
                                 critind_graph** out);
critind_status critind_graph_random_tree(uint32_t n, uint64_t seed,
                                         critind_graph** out);
void critind_graph_free(critind_graph* g);

uint32_t critind_graph_order(const critind_graph* g);
size_t critind_graph_size(const critind_graph* g);
int critind_graph_has_isolated_vertices(const critind_graph* g);
/* NULL when v >= order; pointer valid while the graph lives. */
const char* critind_graph_label(const critind_graph* g, uint32_t v);
critind_status critind_graph_to_edge_list(const critind_graph* g, char** out);

size_t critind_fixture_count(void);
const char* critind_fixture_name(size_t index);

/* ---- analysis ---- */

typedef struct critind_analysis critind_analysis;

typedef struct critind_analysis_options {
    uint32_t alpha_max_vertices;
    uint64_t alpha_max_nodes;
    int with_core_corona; /* 0/1 */
    uint32_t core_max_vertices;
    uint64_t core_max_nodes;
    uint32_t mu_vertex_guard;
    uint32_t alpha_c_guard;
    int cross_check_ker; /* 0/1: run both kernel paths, require equality */
    int with_oracle;     /* 0/1: cross-check against exhaustive search when small */
    uint32_t oracle_limit;
} critind_analysis_options;

void critind_analysis_options_init(critind_analysis_options* o);

critind_status critind_analyze(const critind_graph* g,
                               const critind_analysis_options* o, /* NULL = defaults */
                               critind_analysis** out);
void critind_analysis_free(critind_analysis* a);

int64_t critind_analysis_dc(const critind_analysis* a);
int64_t critind_analysis_idc(const critind_analysis* a);
size_t critind_analysis_epsilon(const critind_analysis* a);
/* Return 1 and set *out when the value is available, else 0. */
int critind_analysis_alpha(const critind_analysis* a, uint32_t* out);
int critind_analysis_mu(const critind_analysis* a, uint32_t* out);
int critind_analysis_alpha_c(const critind_analysis* a, uint32_t* out);
int critind_analysis_xi(const critind_analysis* a, size_t* out);
int critind_analysis_quasi_regularizable(const critind_analysis* a);
/* Pointer into the handle: ker vertex ids, ascending. */
const uint32_t* critind_analysis_ker(const critind_analysis* a, size_t* count);
critind_status critind_analysis_json(const critind_analysis* a, char** out);
critind_status critind_analysis_text(const critind_analysis* a, char** out);

/* ---- verification ---- */

typedef struct critind_verification critind_verification;

typedef struct critind_verify_options {
    const char* checks; /* "C1,C4" or NULL for all */
    uint32_t oracle_limit;
    uint32_t alpha_max_vertices;
    uint64_t alpha_max_nodes;
    uint32_t omega_max_vertices;
    uint64_t omega_max_nodes;
} critind_verify_options;

void critind_verify_options_init(critind_verify_options* o);

critind_status critind_verify(const critind_graph* g,
                              const critind_verify_options* o, /* NULL = defaults */
                              critind_verification** out);
void critind_verification_free(critind_verification* v);

size_t critind_verification_check_count(const critind_verification* v);
const char* critind_verification_check_id(const critind_verification* v, size_t i);
/* 0 = pass, 1 = fail, 2 = skipped; -1 when i is out of range. */
int critind_verification_check_outcome(const critind_verification* v, size_t i);
const char* critind_verification_check_skip_reason(const critind_verification* v, size_t i);
size_t critind_verification_failures(const critind_verification* v);
critind_status critind_verification_json(const critind_verification* v, char** out);
critind_status critind_verification_text(const critind_verification* v, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CRITIND_H */
