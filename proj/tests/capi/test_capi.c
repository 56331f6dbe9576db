/* Exercises the shared-library interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "tsing/tsing.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

static void test_strings(void) {
  tsing_tstring* s = NULL;
  int64_t buf[8];
  int64_t order = 0, weight = 0;
  tsing_string_class cls;

  EXPECT(tsing_hj_expand(25, 14, &s) == TSING_OK);
  EXPECT(tsing_tstring_length(s) == 3);
  EXPECT(tsing_tstring_entries(s, buf, 8) == TSING_OK);
  EXPECT(buf[0] == 2 && buf[1] == 5 && buf[2] == 3);
  EXPECT(tsing_tstring_entries(s, buf, 2) == TSING_BUFFER_TOO_SMALL);
  EXPECT(tsing_hj_evaluate(s, &order, &weight) == TSING_OK);
  EXPECT(order == 25 && weight == 14);
  EXPECT(tsing_hj_classify(s, &cls) == TSING_OK);
  EXPECT(cls.kind == TSING_NONCANONICAL_T && cls.d == 1 && cls.n == 5 && cls.a == 3);
  tsing_tstring_free(s);

  s = NULL;
  EXPECT(tsing_hj_expand(4, 0, &s) == TSING_DOMAIN_ERROR);
  EXPECT(s == NULL);
  EXPECT(strcmp(tsing_last_error(), "Q out of range") == 0);

  {
    const int64_t bad[] = {3, 1};
    EXPECT(tsing_tstring_create(bad, 2, &s) == TSING_DOMAIN_ERROR);
  }
  EXPECT(tsing_hj_expand(4, 1, NULL) == TSING_INVALID_ARGUMENT);
  EXPECT(tsing_tstring_length(NULL) == 0);

  {
    const int64_t four[] = {4};
    tsing_tstring* seed = NULL;
    tsing_tstring* next = NULL;
    EXPECT(tsing_tstring_create(four, 1, &seed) == TSING_OK);
    EXPECT(tsing_hj_iterate_right(seed, &next) == TSING_OK);
    EXPECT(tsing_tstring_entries(next, buf, 8) == TSING_OK);
    EXPECT(tsing_tstring_length(next) == 2 && buf[0] == 5 && buf[1] == 2);
    tsing_tstring_free(next);
    tsing_tstring_free(seed);
  }

  {
    tsing_tstring_list* list = NULL;
    EXPECT(tsing_hj_generate(1, 1, &list) == TSING_OK);
    EXPECT(tsing_tstring_list_size(list) == 2);
    EXPECT(tsing_tstring_list_at(list, 2) == NULL);
    tsing_tstring_list_free(list);
    EXPECT(tsing_hj_seeds_index2(4, &list) == TSING_OK);
    EXPECT(tsing_tstring_list_size(list) == 4);
    tsing_tstring_list_free(list);
  }
}

static void test_lattice(void) {
  const int64_t chain[] = {4, 3, 2};
  tsing_tstring* s = NULL;
  tsing_lattice* lat = NULL;
  tsing_rational delta[3], k2, p;
  int64_t index = 0;

  EXPECT(tsing_tstring_create(chain, 3, &s) == TSING_OK);
  EXPECT(tsing_lattice_from_chain(s, 3, -1, &lat) == TSING_OK);
  EXPECT(tsing_lattice_rank(lat) == 3);
  EXPECT(tsing_lattice_discrepancies(lat, delta, 3) == TSING_OK);
  EXPECT(delta[0].num == 2 && delta[0].den == 3);
  EXPECT(delta[2].num == 1 && delta[2].den == 3);
  EXPECT(tsing_lattice_cartier_index(lat, &index) == TSING_OK && index == 3);
  EXPECT(tsing_lattice_kx_squared(lat, &k2) == TSING_OK && k2.num == 1 && k2.den == 1);
  EXPECT(tsing_lattice_plurigenus(lat, k2, 5, &p) == TSING_OK && p.num == 13 && p.den == 1);
  EXPECT(tsing_lattice_plurigenus(lat, k2, 1, &p) == TSING_DOMAIN_ERROR);
  tsing_lattice_free(lat);
  tsing_tstring_free(s);

  {
    const int64_t gram[] = {-2, 1, 1, -2};
    const int64_t kdeg[] = {0, 0};
    EXPECT(tsing_lattice_create(2, gram, kdeg, 1, 0, &lat) == TSING_OK);
    EXPECT(tsing_lattice_discrepancies(lat, delta, 3) == TSING_OK);
    EXPECT(delta[0].num == 0 && delta[1].num == 0);
    tsing_lattice_free(lat);
  }
  {
    const int64_t gram[] = {-1, 2, 2, -1};
    const int64_t kdeg[] = {0, 0};
    EXPECT(tsing_lattice_create(2, gram, kdeg, 1, 0, &lat) == TSING_DOMAIN_ERROR);
  }

  {
    tsing_rational one = {1, 1}, out;
    tsing_rational l2 = {16, 1}, kl = {2, 1};
    EXPECT(tsing_k2_resolution(one, 3, 1, &out) == TSING_OK && out.num == -2);
    EXPECT(tsing_riemann_roch(3, l2, kl, &out) == TSING_OK && out.num == 10);
  }
}

static void test_hirzebruch(void) {
  tsing_fn_class branch;
  tsing_splitting splits[4];
  size_t count = 0;
  int64_t v = 0;
  tsing_cover_invariants inv;

  EXPECT(tsing_fn_from_sigma0(2, 4, 2, &branch) == TSING_OK);
  EXPECT(branch.a == 10 && branch.b == 4);
  EXPECT(tsing_fn_from_sigma0(2, INT64_MAX, 0, &branch) == TSING_OVERFLOW);
  EXPECT(tsing_fn_from_sigma0(2, 4, 2, &branch) == TSING_OK);
  EXPECT(tsing_fn_h0(branch, &v) == TSING_OK && v == 35);
  EXPECT(tsing_fn_arithmetic_genus(branch, &v) == TSING_OK && v == 15);
  EXPECT(tsing_fn_d_bound(branch, &v) == TSING_OK && v == 32);
  EXPECT(tsing_fn_aut_dim(6, &v) == TSING_OK && v == 11);
  EXPECT(tsing_fn_double_cover(branch, &inv) == TSING_OK && inv.p_g == 2 && inv.chi == 3);
  EXPECT(tsing_fn_splittings(branch, NULL, 0, &count) == TSING_BUFFER_TOO_SMALL && count == 3);
  EXPECT(tsing_fn_splittings(branch, splits, 4, &count) == TSING_OK && count == 3);
  EXPECT(splits[0].d == 9 && splits[1].d == 21 && splits[2].d == 25);
  EXPECT(tsing_fn_moduli_count(TSING_MODULI_R1, 1, &v) == TSING_OK && v == 19);
  EXPECT(tsing_fn_moduli_count(TSING_MODULI_GENERIC, 7, &v) == TSING_DOMAIN_ERROR);
  {
    tsing_fn_class a = {2, 1, 0}, b = {3, 1, 0};
    EXPECT(tsing_fn_intersect(a, b, &v) == TSING_DOMAIN_ERROR);
  }
}

static void test_hilbert(void) {
  const int64_t w1[] = {1, 1, 2, 5}, r1[] = {10};
  const int64_t w2[] = {1, 1, 2, 3, 5}, r2[] = {3, 10};
  tsing_hilbert *h1 = NULL, *h2 = NULL;
  int64_t c = 0;
  int eq = 0;
  tsing_rational one = {1, 1};

  EXPECT(tsing_hilbert_create(w1, 4, r1, 1, &h1) == TSING_OK);
  EXPECT(tsing_hilbert_create(w2, 5, r2, 2, &h2) == TSING_OK);
  EXPECT(tsing_hilbert_equal(h1, h2, &eq) == TSING_OK && eq == 1);
  EXPECT(tsing_hilbert_coefficient(h2, 5, &c) == TSING_OK && c == 13);
  EXPECT(tsing_hilbert_matches_plurigenera(h1, 3, one, 20, &eq) == TSING_OK && eq == 1);
  EXPECT(tsing_hilbert_weight_count(h2) == 4);
  EXPECT(tsing_hilbert_coefficient(h2, -1, &c) == TSING_DOMAIN_ERROR);
  tsing_hilbert_free(h1);
  tsing_hilbert_free(h2);
}

static void test_census(void) {
  tsing_census* c = NULL;
  tsing_record_info info;
  tsing_report* rep = NULL;
  size_t i;

  EXPECT(tsing_census_main_theorem(&c) == TSING_OK);
  EXPECT(tsing_census_size(c) == 3);
  EXPECT(tsing_census_record(c, 2, &info) == TSING_OK);
  EXPECT(info.order == 25 && info.weight == 14 && info.has_moduli && info.moduli_dim == 28);
  EXPECT(info.component == TSING_COMPONENT_NEW);
  EXPECT(tsing_census_record_smoothability_count(c, 2) == 2);
  EXPECT(tsing_census_record(c, 3, &info) == TSING_INVALID_ARGUMENT);
  for (i = 0; i < tsing_census_size(c); ++i) {
    EXPECT(tsing_census_verify(c, i, &rep) == TSING_OK);
    EXPECT(tsing_report_all_passed(rep) == 1);
    EXPECT(tsing_report_size(rep) > 5);
    tsing_report_free(rep);
  }
  tsing_census_free(c);

  EXPECT(tsing_census_run(2, 32, &c) == TSING_OK);
  for (i = 0; i < tsing_census_size(c); ++i) {
    EXPECT(tsing_census_record(c, i, &info) == TSING_OK);
    EXPECT(info.verdict == TSING_VERDICT_ADMITTED || info.verdict == TSING_VERDICT_EXCLUDED);
    if (info.verdict == TSING_VERDICT_EXCLUDED) EXPECT(strlen(tsing_census_record_reason(c, i)) > 0);
  }
  tsing_census_free(c);
  EXPECT(tsing_census_run(3, 1, &c) == TSING_DOMAIN_ERROR);

  EXPECT(tsing_lemma_row_count() == 3);
  {
    tsing_lemma_row row;
    const char *sing = NULL, *label = NULL;
    EXPECT(tsing_lemma_row_at(1, &row, &sing, &label) == TSING_OK);
    EXPECT(row.n == 3 && row.k2_resolution == -1 && strcmp(label, "[4,3,2]") == 0);
  }
  EXPECT(tsing_reason_count() == 4);
}

int main(void) {
  test_strings();
  test_lattice();
  test_hirzebruch();
  test_hilbert();
  test_census();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed (version %s)\n", tsing_version());
  return 0;
}
