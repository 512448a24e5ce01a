/* shufsq — shuffle squares via ordered nest-free graphs.
 *
 * C interface of the shared library. All handles are opaque; every
 * function that can fail returns an sq_status and leaves a detailed
 * message in the calling thread's sq_last_error() buffer. Strings
 * returned through `char**` out-parameters are heap-allocated and must be
 * released with sq_string_free().
 *
 * All operations are pure: handles are immutable after creation and may
 * be shared freely across threads.
 */

#ifndef SHUFSQ_H
#define SHUFSQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sq_status {
  SQ_OK = 0,
  SQ_ERR_INVALID_ARGUMENT = 1,
  SQ_ERR_PARSE = 2,
  SQ_ERR_BUDGET = 3,
  SQ_ERR_INTERNAL = 4
} sq_status;

typedef enum sq_verdict {
  SQ_VERDICT_NO = 0,
  SQ_VERDICT_YES = 1,
  SQ_VERDICT_BUDGET = 2
} sq_verdict;

typedef struct sq_word sq_word;
typedef struct sq_options sq_options;
typedef struct sq_result sq_result;

/* Thread-local message describing the most recent failure. */
const char* sq_last_error(void);
void sq_string_free(char* s);

/* ---- words ------------------------------------------------------- */

/* Dense ("100110") or run-length ("1^3 0^2 1") input, auto-detected. */
sq_status sq_word_parse(const char* text, sq_word** out);
/* Families: W, O, A, B, abba, separated-ones, thue-morse, kolakoski. */
sq_status sq_word_from_family(const char* family, const long long* params, size_t param_count,
                              sq_word** out);
void sq_word_free(sq_word* w);

long long sq_word_length(const sq_word* w);
int sq_word_alphabet_size(const sq_word* w);
int sq_word_is_even(const sq_word* w);
/* style 0 = dense, 1 = run-length */
sq_status sq_word_format(const sq_word* w, int style, char** out);
sq_status sq_word_rotate(const sq_word* w, long long offset, sq_word** out);

/* ---- options ------------------------------------------------------ */

sq_options* sq_options_new(void);
void sq_options_free(sq_options* o);
void sq_options_set_node_budget(sq_options* o, long long nodes);
/* 0 = try the closed-form rules first (default), 1 = exact search only */
void sq_options_set_rule_mode(sq_options* o, int exact_only);
void sq_options_set_max_cuts(sq_options* o, int max_cuts);
void sq_options_set_census_threads(sq_options* o, int threads);

/* ---- solvers ------------------------------------------------------ */

/* Shuffle-square decision with certificate. */
sq_status sq_decide(const sq_word* w, const sq_options* o, sq_result** out);
/* Longest twins: f, g = |W| - 2f, witness twins. */
sq_status sq_longest_twins(const sq_word* w, const sq_options* o, sq_result** out);
/* Cutting distance up to the configured bound. */
sq_status sq_cutting_distance(const sq_word* w, const sq_options* o, sq_result** out);
/* Reverse shuffle square decision (verdict only, brute force). */
sq_status sq_decide_reverse(const sq_word* w, const sq_options* o, sq_result** out);
/* Canonical form of the twins given by 1-based support arrays. */
sq_status sq_canonicalize(const sq_word* w, const long long* x_support, size_t x_len,
                          const long long* y_support, size_t y_len, sq_result** out);

/* Exact shuffle-square census over all binary words of length 2n. */
sq_status sq_census(int n, const sq_options* o, long long* even_words, long long* shuffle_squares);

/* ---- results ------------------------------------------------------ */

void sq_result_free(sq_result* r);
sq_verdict sq_result_verdict(const sq_result* r);
/* Rule that decided (e.g. "prop-abcd", "exact-search"); empty if n/a. */
sq_status sq_result_rule(const sq_result* r, char** out);
/* Reason tag for a no ("odd-length", "not-even", "exhausted-search",
 * "theorem-abba", "claim-cl"); empty when none applies. */
sq_status sq_result_reason(const sq_result* r, char** out);
long long sq_result_f(const sq_result* r);  /* -1 when unknown */
long long sq_result_g(const sq_result* r);  /* -1 when unknown */
int sq_result_optimal(const sq_result* r);
long long sq_result_cuts(const sq_result* r); /* c value, -1 when not found */
long long sq_result_nodes(const sq_result* r);
double sq_result_time_ms(const sq_result* r);
/* One JSON object: {word, verdict, rule, f, g, c?, certificate?, ...}. */
sq_status sq_result_json(const sq_result* r, char** out);
/* Plain twins form "X:{..} Y:{..}" (1-based); empty when no witness. */
sq_status sq_result_twins_text(const sq_result* r, char** out);
/* Word with X underlined red and Y overlined blue (ANSI) or a marker
 * line when color is 0; empty when no witness. */
sq_status sq_result_twins_pretty(const sq_result* r, int color, char** out);
/* Certificate or witness graph in Graphviz DOT form; empty when none. */
sq_status sq_result_graph_dot(const sq_result* r, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SHUFSQ_H */
