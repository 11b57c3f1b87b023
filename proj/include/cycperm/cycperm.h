/* cycperm -- enumeration of cyclic permutations avoiding a pattern in
 * one-line notation and another in standard cycle notation.
 *
 * C API for libcycperm. All functions return a cycperm_status; results are
 * passed back through out-parameters. Opaque handles must be released with
 * the matching *_free function. Permutations travel as text: one-line words
 * are digit strings for n <= 9 ("46152837") and comma-separated otherwise
 * ("4,6,1,5,2,8,3,7,10,9"); cycle words are always parenthesized,
 * e.g. "(1,4,5,2,6,8,7,3)". Pattern sets are comma-separated digit strings,
 * e.g. "3421,4321".
 */
#ifndef CYCPERM_H
#define CYCPERM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CYCPERM_API __declspec(dllexport)
#else
#define CYCPERM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cycperm_status {
  CYCPERM_OK = 0,
  CYCPERM_ERR_INVALID_ARGUMENT = 1,
  CYCPERM_ERR_PARSE = 2,
  CYCPERM_ERR_NOT_CYCLIC = 3,
  CYCPERM_ERR_OUT_OF_RANGE = 4,
  CYCPERM_ERR_RESOURCE_LIMIT = 5,
  CYCPERM_ERR_OVERFLOW = 6,
  CYCPERM_ERR_NO_RECURRENCE = 7,
  CYCPERM_ERR_NOT_A_MEMBER = 8,
  CYCPERM_ERR_OEIS_UNAVAILABLE = 9,
  CYCPERM_ERR_BUFFER_TOO_SMALL = 10,
  CYCPERM_ERR_INTERNAL = 11
} cycperm_status;

CYCPERM_API const char *cycperm_version(void);
CYCPERM_API const char *cycperm_status_name(cycperm_status s);
/* Message for the most recent failure on this thread ("" if none). */
CYCPERM_API const char *cycperm_last_error(void);

/* ---- permutation words -------------------------------------------------- */

/* Standard cycle word of a cyclic permutation, "(1,c2,...,cn)". */
CYCPERM_API cycperm_status cycperm_to_cycle(const char *oneline,
                                            char *buf, size_t buflen);
/* One-line word denoted by a cycle word. */
CYCPERM_API cycperm_status cycperm_from_cycle(const char *cycle,
                                              char *buf, size_t buflen);
CYCPERM_API cycperm_status cycperm_is_cyclic(const char *oneline, int *out);
/* which: "reverse" | "complement" | "inverse" | "rc" | "rci" */
CYCPERM_API cycperm_status cycperm_symmetry(const char *oneline,
                                            const char *which,
                                            char *buf, size_t buflen);
/* 1 iff the sequence (one-line word or "(...)" cycle word) avoids every
 * pattern in the comma-separated set. */
CYCPERM_API cycperm_status cycperm_avoids(const char *seq,
                                          const char *patterns, int *out);

/* ---- exhaustive enumeration --------------------------------------------- */

typedef struct cycperm_enum_options {
  int prune;              /* prune cycle-word prefixes containing tau (default 1) */
  int threads;            /* worker threads; <=1 means sequential */
  int collect_members;    /* keep the member list */
  int64_t node_budget;    /* abort after this many search nodes; 0 = default 1e9 */
  int64_t member_limit;   /* cap on collected members; 0 = default 1e6 */
  /* positional constraints pi(position)=value on the one-line word */
  const int *constraint_positions;
  const int *constraint_values;
  size_t num_constraints;
} cycperm_enum_options;

CYCPERM_API void cycperm_enum_options_init(cycperm_enum_options *opts);

typedef struct cycperm_result cycperm_result;

/* Count (and optionally list) the cyclic permutations of [n] whose one-line
 * word avoids every sigma and whose cycle word avoids every tau. */
CYCPERM_API cycperm_status cycperm_enumerate(const char *sigma,
                                             const char *tau, int n,
                                             const cycperm_enum_options *opts,
                                             cycperm_result **out);
CYCPERM_API int64_t cycperm_result_count(const cycperm_result *r);
CYCPERM_API int64_t cycperm_result_nodes(const cycperm_result *r);
CYCPERM_API double cycperm_result_elapsed_ms(const cycperm_result *r);
CYCPERM_API int cycperm_result_truncated(const cycperm_result *r);
CYCPERM_API size_t cycperm_result_num_members(const cycperm_result *r);
/* Members are sorted lexicographically by one-line word. */
CYCPERM_API cycperm_status cycperm_result_member(const cycperm_result *r,
                                                 size_t index,
                                                 char *buf, size_t buflen);
CYCPERM_API cycperm_status cycperm_result_member_cycle(const cycperm_result *r,
                                                       size_t index,
                                                       char *buf, size_t buflen);
CYCPERM_API void cycperm_result_free(cycperm_result *r);

/* ---- closed forms and recurrences --------------------------------------- */

CYCPERM_API cycperm_status cycperm_fibonacci(int n, int64_t *out);
CYCPERM_API cycperm_status cycperm_binomial(int64_t n, int64_t k, int64_t *out);

/* a_n(sigma;tau) for sigma,tau of length 3. Below the pair's validity
 * threshold the value is computed by exhaustive search and *from_formula is
 * set to 0. */
CYCPERM_API cycperm_status cycperm_closed_form(const char *sigma,
                                               const char *tau, int n,
                                               int64_t *value,
                                               int *from_formula);

typedef struct cycperm_formula_info {
  char sigma[8];
  char tau[8];
  int valid_from;
  char oeis_id[64];      /* "" if none */
  char transform[64];    /* term-wise transform, "" if none */
  char description[128];
} cycperm_formula_info;

CYCPERM_API int cycperm_formula_table_size(void); /* 36 */
CYCPERM_API cycperm_status cycperm_formula_entry(int index,
                                                 cycperm_formula_info *out);

/* Terms generated purely by the pair's recurrence from its base cases.
 * terms[i] corresponds to n = *first_n + i. */
CYCPERM_API cycperm_status cycperm_recurrence_seq(const char *sigma,
                                                  const char *tau, int up_to_n,
                                                  int64_t *terms, size_t cap,
                                                  size_t *count, int *first_n);

/* ---- verification rows --------------------------------------------------- */

typedef struct cycperm_row {
  char sigma[24];
  char tau[24];
  int n;
  int has_brute;
  int64_t brute;
  int has_formula;
  int64_t formula;
  int has_recurrence;
  int64_t recurrence;
  int match;
  double elapsed_ms;
} cycperm_row;

typedef struct cycperm_rows cycperm_rows;

CYCPERM_API cycperm_status cycperm_verify_pair(const char *sigma,
                                               const char *tau,
                                               int n_lo, int n_hi,
                                               int threads,
                                               cycperm_rows **out);
/* name: "binom-n-3-plus-1" | "fib-2n-3" | "A087626-gf". The gf check needs
 * OEIS data (cache_dir and/or allow_network). */
CYCPERM_API cycperm_status cycperm_conjecture_check(const char *name,
                                                    int max_n,
                                                    const char *cache_dir,
                                                    int allow_network,
                                                    cycperm_rows **out);
CYCPERM_API size_t cycperm_rows_size(const cycperm_rows *rows);
CYCPERM_API cycperm_status cycperm_rows_get(const cycperm_rows *rows,
                                            size_t index, cycperm_row *out);
CYCPERM_API void cycperm_rows_free(cycperm_rows *rows);

/* ---- constructive families ----------------------------------------------- */

/* family ids: "123-avoider-start2", "231-avoider-end2", "132-213",
 * "321-231", "123-231-a", "123-231-b", "123-231-c", "123-231-d",
 * "132-231-special", "213-321-v1", "213-321-v2", "321-321-penult".
 * k: family parameter, pass 0 for families without one. */
CYCPERM_API cycperm_status cycperm_construct(const char *family, int n, int k,
                                             char *oneline, size_t oneline_len,
                                             char *cycle, size_t cycle_len);

/* Insertion lifts from the recursive bijections. rule ids:
 * "front-n-end-2", "one-in-position-2", "append-n-minus-1", "append-three",
 * "cycle-merge-insert", "231-231-append", "132-321-cycle-append",
 * "321-321-penult-insert", "321-321-insert-append", "213-321-successor",
 * "321-213-front-2", "321-213-second-1", "312-321-prefix-2",
 * "312-321-prefix-34", "312-321-prefix-354", "312-321-prefix-435",
 * "312-321-prefix-4365". The witness must belong to the smaller class the
 * rule lifts from (checked). */
CYCPERM_API cycperm_status cycperm_lift(const char *rule, const char *sigma,
                                        const char *tau, const char *witness,
                                        char *buf, size_t buflen);

/* ---- OEIS b-files --------------------------------------------------------- */

typedef struct cycperm_oeis cycperm_oeis;

/* Fetch a sequence window from the local cache, or over HTTPS when
 * allow_network is set. refresh forces a re-download. */
CYCPERM_API cycperm_status cycperm_oeis_fetch(const char *oeis_id,
                                              const char *cache_dir,
                                              int allow_network, int refresh,
                                              cycperm_oeis **out);
CYCPERM_API int64_t cycperm_oeis_first_index(const cycperm_oeis *seq);
CYCPERM_API size_t cycperm_oeis_size(const cycperm_oeis *seq);
CYCPERM_API cycperm_status cycperm_oeis_term(const cycperm_oeis *seq,
                                             size_t index, int64_t *out);
CYCPERM_API void cycperm_oeis_free(cycperm_oeis *seq);

/* Compare a pair's closed-form values against its OEIS references up to
 * max_n. Writes one line per reference ("<id>: ok|mismatch|ambiguous|
 * unavailable (...)") into buf. any_mismatch is set when a fetched window
 * contradicts the closed form; any_unavailable when a reference could not
 * be fetched at all. Ambiguous alignments only show up in the report. */
CYCPERM_API cycperm_status cycperm_oeis_cross_check(
    const char *sigma, const char *tau, int max_n, const char *cache_dir,
    int allow_network, int *any_mismatch, int *any_unavailable, char *buf,
    size_t buflen);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CYCPERM_H */
