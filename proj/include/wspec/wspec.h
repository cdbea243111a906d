/*
 * wspec: weight spectra of linear codes over prime fields.
 *
 * C interface. Objects are opaque handles owned by the caller and released
 * with the matching *_free function. Every fallible call returns a
 * wspec_status; on failure wspec_last_error() describes the problem (the
 * message is thread-local and valid until the next failing call on the same
 * thread). Strings returned through char** must be released with
 * wspec_string_free.
 */
#ifndef WSPEC_WSPEC_H
#define WSPEC_WSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WSPEC_BUILDING_LIBRARY)
#    define WSPEC_API __declspec(dllexport)
#  else
#    define WSPEC_API __declspec(dllimport)
#  endif
#else
#  define WSPEC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wspec_status {
  WSPEC_OK = 0,
  WSPEC_ERR_INVALID_ARGUMENT = 1,
  WSPEC_ERR_NOT_PRIME = 2,
  WSPEC_ERR_SIZE_OVERFLOW = 3,
  WSPEC_ERR_UNKNOWN_WEIGHT = 4,
  WSPEC_ERR_NOT_INITIAL_SEGMENT = 5,
  WSPEC_ERR_NOT_FWS = 6,
  WSPEC_ERR_RANK_DEFICIENT = 7,
  WSPEC_ERR_ZERO_COLUMN = 8,
  WSPEC_ERR_OUT_OF_RANGE = 9,
  WSPEC_ERR_NOT_ODD = 10,
  WSPEC_ERR_BUDGET_EXCEEDED = 11,
  WSPEC_ERR_PARSE = 12,
  WSPEC_ERR_INTERNAL = 100
} wspec_status;

typedef struct wspec_weight wspec_weight;
typedef struct wspec_matrix wspec_matrix;
typedef struct wspec_multiset wspec_multiset;
typedef struct wspec_spectrum wspec_spectrum;
typedef struct wspec_bound_report wspec_bound_report;
typedef struct wspec_search_result wspec_search_result;
typedef struct wspec_mws_probe wspec_mws_probe;
typedef struct wspec_table wspec_table;

WSPEC_API const char* wspec_last_error(void);
WSPEC_API const char* wspec_status_name(wspec_status status);
WSPEC_API void wspec_string_free(char* s);

/* ---- fields and weights ------------------------------------------------ */

/* WSPEC_OK if q is prime; WSPEC_ERR_NOT_PRIME or _INVALID_ARGUMENT otherwise. */
WSPEC_API wspec_status wspec_validate_prime(int64_t q);

/* name: "hamming", "lee" or "manhattan". */
WSPEC_API wspec_status wspec_weight_builtin(const char* name, int64_t q, wspec_weight** out);
/* table has q entries, table[0] == 0. */
WSPEC_API wspec_status wspec_weight_custom(int64_t q, const int64_t* table, size_t len, wspec_weight** out);
/* "q v1 v2 ... v_{q-1}" */
WSPEC_API wspec_status wspec_weight_parse(const char* line, wspec_weight** out);
WSPEC_API void wspec_weight_free(wspec_weight* w);
WSPEC_API int64_t wspec_weight_q(const wspec_weight* w);
WSPEC_API const char* wspec_weight_name(const wspec_weight* w);
WSPEC_API void wspec_weight_constants(const wspec_weight* w, int64_t* m, int64_t* delta, int* initial_segment);
WSPEC_API wspec_status wspec_word_weight(const wspec_weight* w, const uint32_t* word, size_t len, int64_t* out);
/* Writes up to cap achievable weights of nonzero length-n words; *count gets the full size. */
WSPEC_API wspec_status wspec_achievable_weights(const wspec_weight* w, int64_t n, int64_t* buf, size_t cap,
                                                size_t* count);

/* ---- generator matrices -------------------------------------------------- */

/* entries: k*n row-major values in [0, q-1]. */
WSPEC_API wspec_status wspec_matrix_create(int64_t q, size_t k, size_t n, const uint32_t* entries,
                                           wspec_matrix** out);
/* Matrix file text: "q k n" header, then k rows of n integers. */
WSPEC_API wspec_status wspec_matrix_parse(const char* text, wspec_matrix** out);
WSPEC_API wspec_status wspec_matrix_format(const wspec_matrix* m, char** out);
WSPEC_API void wspec_matrix_free(wspec_matrix* m);
WSPEC_API int64_t wspec_matrix_q(const wspec_matrix* m);
WSPEC_API size_t wspec_matrix_k(const wspec_matrix* m);
WSPEC_API size_t wspec_matrix_n(const wspec_matrix* m);
WSPEC_API wspec_status wspec_matrix_entries(const wspec_matrix* m, uint32_t* buf, size_t len);
/* Rank over Z_q of an arbitrary rows x cols matrix. */
WSPEC_API wspec_status wspec_rank(int64_t q, size_t rows, size_t cols, const uint32_t* entries, size_t* out);

/* ---- constructions ------------------------------------------------------- */

WSPEC_API wspec_status wspec_construct_general_fws(size_t k, const wspec_weight* w, int64_t n, wspec_multiset** out);
WSPEC_API wspec_status wspec_construct_lee_mws(size_t k, int64_t q, wspec_multiset** out);
WSPEC_API wspec_status wspec_construct_manhattan_mws(size_t k, int64_t q, wspec_multiset** out);
WSPEC_API wspec_status wspec_construct_manhattan_fws(size_t k, int64_t q, int64_t n, wspec_multiset** out);
/* Lines "c1 c2 ... ck ^ mult". */
WSPEC_API wspec_status wspec_multiset_parse(int64_t q, size_t k, const char* text, wspec_multiset** out);
WSPEC_API wspec_status wspec_multiset_format(const wspec_multiset* cm, char** out);
WSPEC_API wspec_status wspec_multiset_expand(const wspec_multiset* cm, wspec_matrix** out);
WSPEC_API int64_t wspec_multiset_length(const wspec_multiset* cm);
WSPEC_API size_t wspec_multiset_block_count(const wspec_multiset* cm);
WSPEC_API void wspec_multiset_free(wspec_multiset* cm);

/* ---- spectra ------------------------------------------------------------- */

WSPEC_API wspec_status wspec_spectrum_compute(const wspec_matrix* m, const wspec_weight* w, wspec_spectrum** out);
WSPEC_API void wspec_spectrum_free(wspec_spectrum* s);
WSPEC_API size_t wspec_spectrum_size(const wspec_spectrum* s);
WSPEC_API wspec_status wspec_spectrum_entry(const wspec_spectrum* s, size_t i, int64_t* weight, uint64_t* count);
WSPEC_API uint64_t wspec_spectrum_max_multiplicity(const wspec_spectrum* s);
WSPEC_API int wspec_spectrum_is_fws(const wspec_spectrum* s);
WSPEC_API int wspec_spectrum_is_mws(const wspec_spectrum* s);
/* (q^k-1)/(q-1) * delta */
WSPEC_API int64_t wspec_spectrum_mws_size(const wspec_spectrum* s);

WSPEC_API wspec_status wspec_support_properties(const wspec_matrix* m, size_t* min_support, int* pairwise_intersecting);
WSPEC_API wspec_status wspec_verify_basis_bound(const wspec_matrix* m, const wspec_weight* w, int* holds);

/* ---- bounds -------------------------------------------------------------- */

typedef enum wspec_quantity {
  WSPEC_Q_MAX_SPECTRUM = 0,           /* L(k,q) */
  WSPEC_Q_MAX_SPECTRUM_AT_LENGTH = 1, /* L(n,k,q) */
  WSPEC_Q_MIN_MWS_LENGTH = 2,         /* M(mu,k,q) */
  WSPEC_Q_MAX_FWS_LENGTH = 3          /* N(mu,k,q) */
} wspec_quantity;

typedef enum wspec_bound_side { WSPEC_BOUND_LOWER = 0, WSPEC_BOUND_UPPER = 1, WSPEC_BOUND_EXACT = 2 } wspec_bound_side;

/* n is used only for WSPEC_Q_MAX_SPECTRUM_AT_LENGTH. */
WSPEC_API wspec_status wspec_bounds(wspec_quantity quantity, const wspec_weight* w, size_t k, int64_t n,
                                    wspec_bound_report** out);
WSPEC_API void wspec_bound_report_free(wspec_bound_report* r);
WSPEC_API const char* wspec_bound_quantity_label(const wspec_bound_report* r);
/* Returns 1 and fills value/source when that side is present, 0 otherwise. */
WSPEC_API int wspec_bound_get(const wspec_bound_report* r, wspec_bound_side side, int64_t* value, const char** source);
WSPEC_API const char* wspec_bound_note(const wspec_bound_report* r);
WSPEC_API int wspec_sandwich_check(int64_t code_size, int64_t max_multiplicity, int64_t m, int64_t n,
                                   int64_t observed);

/* ---- search -------------------------------------------------------------- */

typedef struct wspec_search_options {
  uint64_t budget;
  unsigned workers;
  int reverse_order;
} wspec_search_options;

WSPEC_API void wspec_search_options_init(wspec_search_options* opts);
WSPEC_API wspec_status wspec_canonical_column_count(size_t k, const wspec_weight* w, size_t* out);
/* On WSPEC_ERR_BUDGET_EXCEEDED, *required (if non-null) receives the multiset
 * count, or UINT64_MAX when that count overflows. opts may be null. */
WSPEC_API wspec_status wspec_search(int64_t n, size_t k, const wspec_weight* w, const wspec_search_options* opts,
                                    wspec_search_result** out, uint64_t* required);
WSPEC_API void wspec_search_result_free(wspec_search_result* r);
WSPEC_API int64_t wspec_search_l_value(const wspec_search_result* r);
WSPEC_API int wspec_search_mws_attained(const wspec_search_result* r);
WSPEC_API int wspec_search_fws_attained(const wspec_search_result* r);
WSPEC_API uint64_t wspec_search_examined(const wspec_search_result* r);
WSPEC_API uint64_t wspec_search_rank_deficient(const wspec_search_result* r);
WSPEC_API int wspec_search_exhaustive(const wspec_search_result* r);
WSPEC_API size_t wspec_search_witness_count(const wspec_search_result* r);
/* Copies witness i into a new multiset handle. */
WSPEC_API wspec_status wspec_search_witness(const wspec_search_result* r, size_t i, wspec_multiset** out);

WSPEC_API wspec_status wspec_min_mws_length(size_t k, const wspec_weight* w, int64_t n_max,
                                            const wspec_search_options* opts, wspec_mws_probe** out);
WSPEC_API void wspec_mws_probe_free(wspec_mws_probe* p);
/* Returns 1 and writes *n when an MWS length was found. */
WSPEC_API int wspec_mws_probe_found(const wspec_mws_probe* p, int64_t* n);
WSPEC_API size_t wspec_mws_probe_count(const wspec_mws_probe* p);
/* Borrowed view of the i-th per-length result; owned by the probe. */
WSPEC_API const wspec_search_result* wspec_mws_probe_result(const wspec_mws_probe* p, size_t i, int64_t* n);
/* Returns 1 when the budget stopped the probe; *n and *required describe where. */
WSPEC_API int wspec_mws_probe_budget_stop(const wspec_mws_probe* p, int64_t* n, uint64_t* required);

/* ---- table reproduction -------------------------------------------------- */

typedef enum wspec_row_status {
  WSPEC_ROW_MATCH = 0,
  WSPEC_ROW_DOCUMENTED_MISMATCH = 1,
  WSPEC_ROW_MISMATCH = 2
} wspec_row_status;

typedef struct wspec_table_row {
  const char* label;
  int64_t n; /* 0 for rows maximised over lengths */
  size_t k;
  int64_t q;
  int64_t published;
  int64_t computed;
  int published_mws; /* -1 when the table makes no claim */
  int published_fws;
  int computed_mws;
  int computed_fws;
  wspec_row_status status;
  const char* note;
} wspec_table_row;

/* name: "lee-small" or "manhattan-small". */
WSPEC_API wspec_status wspec_table_reproduce(const char* name, const wspec_search_options* opts, wspec_table** out);
WSPEC_API void wspec_table_free(wspec_table* t);
WSPEC_API size_t wspec_table_row_count(const wspec_table* t);
/* Strings in *row are owned by the table. */
WSPEC_API wspec_status wspec_table_get_row(const wspec_table* t, size_t i, wspec_table_row* row);
/* 1 when no row is an unexpected mismatch. */
WSPEC_API int wspec_table_ok(const wspec_table* t);
WSPEC_API const char* wspec_row_status_name(wspec_row_status s);

#ifdef __cplusplus
}
#endif

#endif /* WSPEC_WSPEC_H */
