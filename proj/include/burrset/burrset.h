/*
 * burrset C API.
 *
 * Every handle is opaque and owned by the caller once returned; release it
 * with the matching *_destroy function (passing NULL is allowed). Functions
 * returning burr_status leave a human-readable message retrievable with
 * burr_last_error() on the calling thread when the status is not BURR_OK.
 */
#ifndef BURRSET_BURRSET_H
#define BURRSET_BURRSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define BURR_API __declspec(dllexport)
#else
#  define BURR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum burr_status {
  BURR_OK = 0,
  BURR_E_USAGE = 1,
  BURR_E_RESOURCE = 2,
  BURR_E_INFEASIBLE_BASE = 3,
  BURR_E_UNSUPPORTED_B1 = 4,
  BURR_E_OUT_OF_RANGE = 5,
  BURR_E_INTERNAL = 6,
  BURR_E_OVERFLOW = 7,
  BURR_E_NULL_ARG = 8
} burr_status;

BURR_API const char* burr_version(void);
BURR_API const char* burr_status_name(burr_status s);
BURR_API const char* burr_last_error(void);

/* Immutable list of unsigned integers (elements, gaps, chains, witnesses). */
typedef struct burr_list burr_list;
BURR_API size_t burr_list_size(const burr_list* l);
BURR_API const uint64_t* burr_list_data(const burr_list* l);
BURR_API void burr_list_destroy(burr_list* l);

/* Sumsets. max_cap = 0 selects the default memory ceiling (2^24). Element
 * arrays must be strictly increasing and positive. */
typedef struct burr_sumset burr_sumset;
BURR_API burr_status burr_sumset_of(const uint64_t* elems, size_t n, uint64_t cap,
                                    uint64_t max_cap, burr_sumset** out);
BURR_API burr_status burr_sumset_add(const burr_sumset* s, uint64_t a, burr_sumset** out);
BURR_API int burr_sumset_contains(const burr_sumset* s, uint64_t x);
BURR_API uint64_t burr_sumset_cap(const burr_sumset* s);
BURR_API uint64_t burr_sumset_count(const burr_sumset* s);
/* BURR_E_OVERFLOW when sigma does not fit in 64 bits. */
BURR_API burr_status burr_sumset_sigma(const burr_sumset* s, uint64_t* out);
/* Writes sigma in decimal (NUL-terminated, truncated to len); returns the
 * length needed excluding the terminator. */
BURR_API size_t burr_sumset_sigma_decimal(const burr_sumset* s, char* buf, size_t len);
BURR_API burr_status burr_sumset_gaps(const burr_sumset* s, uint64_t upto, burr_list** out);
BURR_API burr_status burr_sumset_first_gaps(const burr_sumset* s, uint64_t limit,
                                            size_t count, burr_list** out);
BURR_API void burr_sumset_destroy(burr_sumset* s);

/* Exhaustive subset enumeration, n <= 20. */
BURR_API burr_status burr_brute_force_sumset(const uint64_t* elems, size_t n, burr_list** out);

/* Structural lemma checks. */
typedef enum burr_chain_clause {
  BURR_CHAIN_FIRST_IS_ONE = 0,
  BURR_CHAIN_SECOND_REACH_THREE = 1,
  BURR_CHAIN_GROWTH = 2,
  BURR_CHAIN_REACH_BELOW_B1 = 3,
  BURR_CHAIN_SUMSET_INTERVAL = 4
} burr_chain_clause;

typedef enum burr_head_clause {
  BURR_HEAD_NEXT_IS_B1_PLUS_ONE = 0,
  BURR_HEAD_SECOND_BOUND = 1,
  BURR_HEAD_THIRD_BOUND = 2,
  BURR_HEAD_B2_LOWER_BOUND = 3,
  BURR_HEAD_PREFIX_PATTERN = 4,
  BURR_HEAD_CLAUSE_COUNT = 5
} burr_head_clause;

BURR_API const char* burr_chain_clause_name(burr_chain_clause c);
BURR_API const char* burr_head_clause_name(burr_head_clause c);

typedef struct burr_lemma21 burr_lemma21;
BURR_API burr_status burr_verify_lemma21(const uint64_t* elems, size_t n, uint64_t b1,
                                         burr_lemma21** out);
BURR_API size_t burr_lemma21_k(const burr_lemma21* r);
BURR_API int burr_lemma21_pass(const burr_lemma21* r);
BURR_API burr_status burr_lemma21_chain(const burr_lemma21* r, burr_list** out);
BURR_API size_t burr_lemma21_violation_count(const burr_lemma21* r);
BURR_API burr_status burr_lemma21_violation(const burr_lemma21* r, size_t i, size_t* index,
                                            burr_chain_clause* clause);
BURR_API void burr_lemma21_destroy(burr_lemma21* r);

typedef struct burr_lemma22 burr_lemma22;
BURR_API burr_status burr_verify_lemma22(const uint64_t* elems, size_t n, uint64_t b1,
                                         uint64_t b2, burr_lemma22** out);
BURR_API size_t burr_lemma22_k(const burr_lemma22* r);
/* a_{k+1}, a_{k+2}, a_{k+3} */
BURR_API void burr_lemma22_head(const burr_lemma22* r, uint64_t out[3]);
BURR_API int burr_lemma22_clause(const burr_lemma22* r, burr_head_clause c);
BURR_API int burr_lemma22_pass(const burr_lemma22* r);
BURR_API void burr_lemma22_destroy(burr_lemma22* r);

/* Construction. */
typedef enum burr_case {
  BURR_CASE_RANGE_LOW = 0,
  BURR_CASE_RANGE_MID_J = 1,
  BURR_CASE_RANGE_HIGH_GENERIC = 2,
  BURR_CASE_RANGE_HIGH_SPECIAL = 3
} burr_case;

BURR_API const char* burr_case_name(burr_case c);

/* BURR_E_INFEASIBLE_BASE when no base segment exists. */
BURR_API burr_status burr_base_segment(uint64_t b1, burr_list** out);

typedef struct burr_plan burr_plan;
BURR_API burr_status burr_plan_create(uint64_t b1, uint64_t b2, burr_plan** out);
BURR_API burr_case burr_plan_case(const burr_plan* p);
BURR_API uint64_t burr_plan_m(const burr_plan* p);
/* Returns 1 and fills j, l for the two low cases; 0 otherwise. */
BURR_API int burr_plan_jl(const burr_plan* p, uint64_t* j, uint64_t* l);
BURR_API uint64_t burr_plan_min_horizon(const burr_plan* p);
BURR_API const char* burr_plan_tail_rule(const burr_plan* p);
BURR_API burr_status burr_plan_head(const burr_plan* p, burr_list** out);
BURR_API burr_status burr_realize(const burr_plan* p, uint64_t horizon, burr_list** out);
BURR_API burr_status burr_realize_head(const burr_plan* p, burr_list** out);
BURR_API void burr_plan_destroy(burr_plan* p);

/* B ∩ [0, horizon] for the given finite prefix. */
BURR_API burr_status burr_derive_b(const uint64_t* elems, size_t n, uint64_t horizon,
                                   uint64_t max_cap, burr_list** out);

/* Feasibility search. */
typedef struct burr_limits {
  uint64_t max_nodes;
  double max_seconds;
  int memoize;
} burr_limits;

BURR_API burr_limits burr_limits_default(void);

typedef enum burr_outcome {
  BURR_FEASIBLE = 0,
  BURR_INFEASIBLE = 1,
  BURR_RESOURCE_EXCEEDED = 2
} burr_outcome;

BURR_API const char* burr_outcome_name(burr_outcome o);

typedef struct burr_search_result burr_search_result;
/* limits may be NULL for the defaults. */
BURR_API burr_status burr_search(uint64_t b1, uint64_t b2, uint64_t b3,
                                 const burr_limits* limits, burr_search_result** out);
BURR_API burr_outcome burr_search_outcome(const burr_search_result* r);
BURR_API uint64_t burr_search_nodes(const burr_search_result* r);
BURR_API uint64_t burr_search_max_depth(const burr_search_result* r);
/* Empty lists unless the outcome is BURR_FEASIBLE. */
BURR_API burr_status burr_search_witness(const burr_search_result* r, burr_list** out);
BURR_API burr_status burr_search_certificate(const burr_search_result* r, burr_list** out);
BURR_API void burr_search_result_destroy(burr_search_result* r);

typedef enum burr_critical_status {
  BURR_CRITICAL_FOUND = 0,
  BURR_CRITICAL_NOT_FOUND = 1,
  BURR_CRITICAL_INCONCLUSIVE = 2
} burr_critical_status;

BURR_API const char* burr_critical_status_name(burr_critical_status s);

typedef struct burr_critical {
  burr_critical_status status;
  uint64_t b3;              /* valid when FOUND */
  uint64_t first_undecided; /* valid when INCONCLUSIVE */
  uint64_t nodes;
} burr_critical;

BURR_API burr_status burr_critical_b3(uint64_t b1, uint64_t b2, uint64_t b3_max,
                                      const burr_limits* limits, burr_critical* out);

#ifdef __cplusplus
}
#endif

#endif /* BURRSET_BURRSET_H */
