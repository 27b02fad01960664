/* iterpoly: iterative construction of irreducible polynomials over odd prime
 * fields, with the elliptic-curve and functional-graph machinery needed to
 * cross-check it.  C API of the shared library; all heavy state lives behind
 * opaque handles and every call reports an iterpoly_status.
 *
 * Strings returned through char** are heap-allocated; release them with
 * iterpoly_free().  Polynomial arguments accept either a human-readable form
 * ("x^2+3x+1", ASCII caret powers) or a decimal coefficient list
 * ("c0,c1,...,cn", constant term first).
 */
#ifndef ITERPOLY_H
#define ITERPOLY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iterpoly_status {
  ITERPOLY_OK = 0,
  ITERPOLY_ERR_INVALID_ARGUMENT = 1,
  ITERPOLY_ERR_PARSE = 2,
  ITERPOLY_ERR_INVALID_MODULUS = 3,
  ITERPOLY_ERR_INVALID_SEED = 4,
  ITERPOLY_ERR_SCALE_LIMIT = 5,
  ITERPOLY_ERR_CONTRACT_VIOLATION = 6,
  ITERPOLY_ERR_NO_ALPHA = 7,
  ITERPOLY_ERR_WRONG_CASE = 8,
  ITERPOLY_ERR_UNKNOWN_SUITE = 9,
  ITERPOLY_ERR_INTERNAL = 10
} iterpoly_status;

const char* iterpoly_version(void);
const char* iterpoly_status_name(iterpoly_status status);

/* Detail message of the most recent failure on the calling thread. */
const char* iterpoly_last_error(void);

void iterpoly_free(void* ptr);

/* ------------------------------------------------------------------ */
/* Finite fields                                                       */

typedef struct iterpoly_field iterpoly_field;

/* F_{p^n}; pass modulus = NULL to use the canonical defining polynomial
 * (the first monic irreducible of degree n). */
iterpoly_status iterpoly_field_new(uint64_t p, uint32_t n, const char* modulus,
                                   iterpoly_field** out);
void iterpoly_field_release(iterpoly_field* field);
uint64_t iterpoly_field_p(const iterpoly_field* field);
uint32_t iterpoly_field_degree(const iterpoly_field* field);
iterpoly_status iterpoly_field_modulus(const iterpoly_field* field, char** out);

/* ------------------------------------------------------------------ */
/* Polynomial utilities                                                */

iterpoly_status iterpoly_poly_is_irreducible(uint64_t p, const char* poly, int* out);

/* Degree-doubling transform of a monic polynomial; dual = 0 applies the
 * Q_k transform, dual = 1 the Qhat_k transform. */
iterpoly_status iterpoly_transform(uint64_t p, uint64_t k, const char* poly, int dual,
                                   char** out);

/* ------------------------------------------------------------------ */
/* Duplication graphs over P^1(F_q)                                    */

typedef struct iterpoly_graph iterpoly_graph;

/* cap / workers = 0 select the defaults (2^24 nodes, hardware threads). */
iterpoly_status iterpoly_graph_build(const iterpoly_field* field, uint64_t cap,
                                     uint32_t workers, iterpoly_graph** out);
void iterpoly_graph_release(iterpoly_graph* graph);
uint64_t iterpoly_graph_node_count(const iterpoly_graph* graph);
uint32_t iterpoly_graph_component_count(const iterpoly_graph* graph);

/* DOT text; dlog_labels = 1 names finite nodes by discrete logarithm with
 * respect to the canonical primitive element ("0" for zero, "inf"). */
iterpoly_status iterpoly_graph_dot(const iterpoly_graph* graph, int dlog_labels, char** out);
/* {"q":..., "nodes":[...], "successor":[...], "components":[...]} */
iterpoly_status iterpoly_graph_json(const iterpoly_graph* graph, char** out);
/* Component table: id, size, cycle length, tree depths. */
iterpoly_status iterpoly_graph_summary(const iterpoly_graph* graph, char** out);

/* ------------------------------------------------------------------ */
/* Irreducible-polynomial sequences                                    */

typedef struct iterpoly_sequence iterpoly_sequence;

typedef struct iterpoly_sequence_params {
  uint64_t p;
  uint64_t k;
  const char* seed;       /* monic irreducible polynomial */
  uint32_t steps;         /* 0: default 12 */
  uint32_t policy;        /* 0 lex-first factor, 1 lex-second, 2 seeded random */
  uint64_t rng_seed;      /* 0: library default */
  uint64_t annotate_cap;  /* 0: skip root-level annotation */
} iterpoly_sequence_params;

iterpoly_status iterpoly_sequence_run(const iterpoly_sequence_params* params,
                                      iterpoly_sequence** out);
void iterpoly_sequence_release(iterpoly_sequence* seq);
iterpoly_status iterpoly_sequence_json(const iterpoly_sequence* seq, char** out);
iterpoly_status iterpoly_sequence_table(const iterpoly_sequence* seq, char** out);

/* ------------------------------------------------------------------ */
/* Verification suites and the atlas                                   */

typedef struct iterpoly_verify_params {
  const char* suite;  /* composition, preimage, isogeny, valuation, depth,
                         orders, doubling, all */
  uint64_t p;         /* 0: the suite's default prime grid */
  uint32_t n;         /* 0: suite default */
  uint32_t towers;    /* 0: suite default */
  uint32_t steps;     /* 0: suite default */
  uint64_t cap;       /* 0: default 2^24 */
  uint32_t workers;   /* 0: hardware threads */
  uint64_t rng_seed;  /* 0: library default */
} iterpoly_verify_params;

iterpoly_status iterpoly_verify_run(const iterpoly_verify_params* params, char** report,
                                    int* all_pass);

typedef struct iterpoly_atlas_params {
  uint64_t p_min, p_max;
  uint32_t n;        /* 0: 1 */
  uint32_t steps;    /* 0: 16 */
  uint64_t cap;      /* 0: default 2^24 */
  uint32_t workers;  /* 0: hardware threads */
  uint64_t rng_seed; /* 0: library default */
} iterpoly_atlas_params;

iterpoly_status iterpoly_atlas_run(const iterpoly_atlas_params* params, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* ITERPOLY_H */
