/*
 * tsing: exact computations for T-singular surfaces.
 *
 * C interface. Every fallible call returns a tsing_status; on failure a
 * one-line message is available from tsing_last_error() on the calling
 * thread until the next failing call. Objects returned through `out`
 * pointers are owned by the caller and released with the matching
 * *_free function. Pointers returned by accessors (strings, list items)
 * are borrowed and stay valid as long as their owner.
 */
#ifndef TSING_TSING_H
#define TSING_TSING_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TSING_BUILDING_LIBRARY)
#    define TSING_API __declspec(dllexport)
#  else
#    define TSING_API __declspec(dllimport)
#  endif
#else
#  define TSING_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tsing_status {
  TSING_OK = 0,
  TSING_DOMAIN_ERROR = 1,     /* precondition on the inputs violated */
  TSING_OVERFLOW = 2,         /* exact arithmetic left 64-bit range */
  TSING_INVALID_ARGUMENT = 3, /* null pointer or bad index */
  TSING_BUFFER_TOO_SMALL = 4, /* caller buffer shorter than the result */
  TSING_INTERNAL_ERROR = 5
} tsing_status;

TSING_API const char* tsing_last_error(void);
TSING_API const char* tsing_version(void);

typedef struct tsing_rational {
  int64_t num;
  int64_t den; /* > 0, gcd(num, den) == 1 */
} tsing_rational;

/* ---- Hirzebruch-Jung strings ------------------------------------------ */

typedef struct tsing_tstring tsing_tstring;
typedef struct tsing_tstring_list tsing_tstring_list;

TSING_API tsing_status tsing_tstring_create(const int64_t* entries, size_t length, tsing_tstring** out);
TSING_API void tsing_tstring_free(tsing_tstring* s);
TSING_API size_t tsing_tstring_length(const tsing_tstring* s);
/* Copies the entries; fails with TSING_BUFFER_TOO_SMALL if capacity < length. */
TSING_API tsing_status tsing_tstring_entries(const tsing_tstring* s, int64_t* buffer, size_t capacity);

TSING_API tsing_status tsing_hj_expand(int64_t order, int64_t weight, tsing_tstring** out);
TSING_API tsing_status tsing_hj_evaluate(const tsing_tstring* s, int64_t* order, int64_t* weight);

typedef enum tsing_string_kind {
  TSING_RATIONAL_DOUBLE_POINT = 0,
  TSING_NONCANONICAL_T = 1,
  TSING_NOT_T = 2
} tsing_string_kind;

typedef struct tsing_string_class {
  tsing_string_kind kind;
  int64_t d, n, a; /* zero unless kind == TSING_NONCANONICAL_T */
} tsing_string_class;

TSING_API tsing_status tsing_hj_classify(const tsing_tstring* s, tsing_string_class* out);
TSING_API tsing_status tsing_hj_iterate_left(const tsing_tstring* s, tsing_tstring** out);
TSING_API tsing_status tsing_hj_iterate_right(const tsing_tstring* s, tsing_tstring** out);

TSING_API tsing_status tsing_hj_seeds_index2(int64_t d_max, tsing_tstring_list** out);
TSING_API tsing_status tsing_hj_generate(int level, int64_t d_max, tsing_tstring_list** out);
TSING_API size_t tsing_tstring_list_size(const tsing_tstring_list* list);
TSING_API const tsing_tstring* tsing_tstring_list_at(const tsing_tstring_list* list, size_t index);
TSING_API void tsing_tstring_list_free(tsing_tstring_list* list);

/* ---- Exceptional lattices ---------------------------------------------- */

/* A curve configuration together with its solved discrepancy divisor. */
typedef struct tsing_lattice tsing_lattice;

TSING_API tsing_status tsing_lattice_from_chain(const tsing_tstring* s, int64_t chi, int64_t k_self,
                                                tsing_lattice** out);
/* gram is rank*rank, row-major. */
TSING_API tsing_status tsing_lattice_create(size_t rank, const int64_t* gram, const int64_t* k_degrees, int64_t chi,
                                            int64_t k_self, tsing_lattice** out);
TSING_API void tsing_lattice_free(tsing_lattice* lat);
TSING_API size_t tsing_lattice_rank(const tsing_lattice* lat);
TSING_API tsing_status tsing_lattice_discrepancies(const tsing_lattice* lat, tsing_rational* buffer, size_t capacity);
TSING_API tsing_status tsing_lattice_cartier_index(const tsing_lattice* lat, int64_t* out);
TSING_API tsing_status tsing_lattice_kx_squared(const tsing_lattice* lat, tsing_rational* out);
TSING_API tsing_status tsing_lattice_correction_term(const tsing_lattice* lat, int64_t m, tsing_rational* out);
/* Uses the lattice's chi; m >= 2. */
TSING_API tsing_status tsing_lattice_plurigenus(const tsing_lattice* lat, tsing_rational k2_x, int64_t m,
                                                tsing_rational* out);

TSING_API tsing_status tsing_k2_resolution(tsing_rational k2_x, int64_t r, int64_t d, tsing_rational* out);
TSING_API tsing_status tsing_riemann_roch(int64_t chi, tsing_rational l_self, tsing_rational k_dot_l,
                                          tsing_rational* out);

/* ---- Hirzebruch surfaces ----------------------------------------------- */

/* a*Gamma + b*sigma_inf on F_n */
typedef struct tsing_fn_class {
  int64_t n;
  int64_t a;
  int64_t b;
} tsing_fn_class;

/* x*sigma_0 + y*Gamma */
TSING_API tsing_status tsing_fn_from_sigma0(int64_t n, int64_t x, int64_t y, tsing_fn_class* out);
TSING_API tsing_status tsing_fn_intersect(tsing_fn_class c1, tsing_fn_class c2, int64_t* out);
TSING_API tsing_status tsing_fn_canonical_class(int64_t n, tsing_fn_class* out);
TSING_API tsing_status tsing_fn_h0(tsing_fn_class c, int64_t* out);
TSING_API tsing_status tsing_fn_aut_dim(int64_t n, int64_t* out);
TSING_API tsing_status tsing_fn_arithmetic_genus(tsing_fn_class c, int64_t* out);
TSING_API tsing_status tsing_fn_d_bound(tsing_fn_class branch, int64_t* out);

typedef struct tsing_cover_invariants {
  int64_t chi;
  int64_t k_self;
  int64_t p_g;
  int64_t q;
  tsing_fn_class adjoint;
} tsing_cover_invariants;

TSING_API tsing_status tsing_fn_double_cover(tsing_fn_class branch, tsing_cover_invariants* out);

typedef struct tsing_splitting {
  tsing_fn_class first;
  tsing_fn_class second;
  int64_t m;
  int64_t d;
} tsing_splitting;

/* *count always receives the number of splittings; buffer may be NULL when
 * capacity is 0. */
TSING_API tsing_status tsing_fn_splittings(tsing_fn_class total, tsing_splitting* buffer, size_t capacity,
                                           size_t* count);

typedef enum tsing_moduli_case {
  TSING_MODULI_GENERIC = 0,
  TSING_MODULI_R1 = 1,
  TSING_MODULI_R2 = 2,
  TSING_MODULI_R3 = 3
} tsing_moduli_case;

TSING_API tsing_status tsing_fn_moduli_count(tsing_moduli_case c, int64_t d, int64_t* out);

/* ---- Hilbert series ---------------------------------------------------- */

typedef struct tsing_hilbert tsing_hilbert;

TSING_API tsing_status tsing_hilbert_create(const int64_t* weights, size_t n_weights, const int64_t* relations,
                                            size_t n_relations, tsing_hilbert** out);
TSING_API void tsing_hilbert_free(tsing_hilbert* h);
TSING_API tsing_status tsing_hilbert_coefficient(const tsing_hilbert* h, int64_t m, int64_t* out);
TSING_API tsing_status tsing_hilbert_equal(const tsing_hilbert* h1, const tsing_hilbert* h2, int* out);
TSING_API tsing_status tsing_hilbert_matches_plurigenera(const tsing_hilbert* h, int64_t chi, tsing_rational k2,
                                                         int64_t m_max, int* out);
/* Canonical (cancelled) weight / relation multisets, ascending. */
TSING_API size_t tsing_hilbert_weight_count(const tsing_hilbert* h);
TSING_API size_t tsing_hilbert_relation_count(const tsing_hilbert* h);
TSING_API tsing_status tsing_hilbert_weights(const tsing_hilbert* h, int64_t* buffer, size_t capacity);
TSING_API tsing_status tsing_hilbert_relations(const tsing_hilbert* h, int64_t* buffer, size_t capacity);

/* ---- Census ------------------------------------------------------------ */

typedef struct tsing_census tsing_census;
typedef struct tsing_report tsing_report;

typedef enum tsing_verdict {
  TSING_VERDICT_PENDING = 0,
  TSING_VERDICT_ADMITTED = 1,
  TSING_VERDICT_EXCLUDED = 2,
  TSING_VERDICT_UNRESOLVED = 3
} tsing_verdict;

typedef enum tsing_component {
  TSING_COMPONENT_MAIN_DIVISOR = 0,
  TSING_COMPONENT_MAIN_CODIM = 1,
  TSING_COMPONENT_NEW = 2,
  TSING_COMPONENT_NOT_APPLICABLE = 3
} tsing_component;

typedef enum tsing_smoothability {
  TSING_SMOOTHABLE_YES = 0,
  TSING_SMOOTHABLE_NO = 1,
  TSING_SMOOTHABLE_CONJECTURAL = 2
} tsing_smoothability;

typedef struct tsing_record_info {
  int64_t cartier_index;
  int64_t d, n, a;
  int64_t order, weight;
  int64_t level;
  int64_t k2_resolution;
  tsing_verdict verdict;
  int has_moduli;
  int64_t moduli_dim;
  tsing_component component;
  int64_t codim;         /* for TSING_COMPONENT_MAIN_CODIM */
  int64_t family_d_max;  /* 0 unless the row stands for a d-family */
  int cited;             /* exclusion rests on an external result */
} tsing_record_info;

TSING_API tsing_status tsing_census_candidates(int level, int64_t d_max, tsing_census** out);
TSING_API tsing_status tsing_census_filter(const tsing_census* pending, tsing_census** out);
TSING_API tsing_status tsing_census_run(int max_level, int64_t d_max, tsing_census** out);
TSING_API tsing_status tsing_census_main_theorem(tsing_census** out);
TSING_API void tsing_census_free(tsing_census* c);
TSING_API size_t tsing_census_size(const tsing_census* c);
TSING_API tsing_status tsing_census_record(const tsing_census* c, size_t i, tsing_record_info* out);
TSING_API const tsing_tstring* tsing_census_record_string(const tsing_census* c, size_t i);
/* Borrowed, never NULL for a valid index ("" when absent). */
TSING_API const char* tsing_census_record_construction(const tsing_census* c, size_t i);
TSING_API const char* tsing_census_record_note(const tsing_census* c, size_t i);
TSING_API const char* tsing_census_record_reason(const tsing_census* c, size_t i);
TSING_API const char* tsing_census_record_reason_anchor(const tsing_census* c, size_t i);
TSING_API size_t tsing_census_record_smoothability_count(const tsing_census* c, size_t i);
TSING_API tsing_status tsing_census_record_smoothability(const tsing_census* c, size_t i, size_t j,
                                                         tsing_smoothability* value, const char** variant);

TSING_API size_t tsing_reason_count(void);
TSING_API tsing_status tsing_reason_at(size_t i, const char** anchor, const char** quote, int* cited);

typedef struct tsing_lemma_row {
  int64_t level;
  int64_t n;
  int64_t k2_resolution;
} tsing_lemma_row;

TSING_API size_t tsing_lemma_row_count(void);
/* singularity and strings_label are borrowed static strings. */
TSING_API tsing_status tsing_lemma_row_at(size_t i, tsing_lemma_row* out, const char** singularity,
                                          const char** strings_label);

TSING_API tsing_status tsing_census_verify(const tsing_census* c, size_t i, tsing_report** out);
TSING_API void tsing_report_free(tsing_report* r);
TSING_API size_t tsing_report_size(const tsing_report* r);
TSING_API int tsing_report_all_passed(const tsing_report* r);
TSING_API tsing_status tsing_report_check(const tsing_report* r, size_t i, const char** name, int* passed,
                                          const char** expected, const char** actual);

#ifdef __cplusplus
}
#endif

#endif /* TSING_TSING_H */
