#include "tsing/tsing.h"

#include <exception>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "tsing/census.hpp"
#include "tsing/errors.hpp"
#include "tsing/exceptional_lattice.hpp"
#include "tsing/hilbert_series.hpp"
#include "tsing/hirzebruch.hpp"
#include "tsing/hj_strings.hpp"

struct tsing_tstring {
  tsing::TString value;
};

struct tsing_tstring_list {
  std::vector<tsing_tstring> items;
};

struct tsing_lattice {
  tsing::ExceptionalConfig config;
  tsing::QDivisor delta;
};

struct tsing_hilbert {
  tsing::HilbertSeries value;
};

struct tsing_census {
  std::vector<tsing::CensusRecord> records;
  std::vector<tsing_tstring> strings;  // parallel to records, for borrowed handles
};

struct tsing_report {
  tsing::VerificationReport value;
};

namespace {

thread_local std::string g_last_error;

tsing_status fail(tsing_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename F>
tsing_status guarded(F&& body) {
  try {
    return body();
  } catch (const tsing::DomainError& e) {
    return fail(TSING_DOMAIN_ERROR, e.what());
  } catch (const tsing::OverflowError& e) {
    return fail(TSING_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TSING_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(TSING_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(TSING_INTERNAL_ERROR, "unknown error");
  }
}

#define TSING_REQUIRE(ptr) \
  if (!(ptr)) return fail(TSING_INVALID_ARGUMENT, #ptr " must not be null")

tsing::Rational from_c(tsing_rational r) { return tsing::Rational(r.num, r.den); }
tsing_rational to_c(const tsing::Rational& r) { return {r.num(), r.den()}; }

tsing::FnClass from_c(tsing_fn_class c) { return {c.n, c.a, c.b}; }
tsing_fn_class to_c(const tsing::FnClass& c) { return {c.n, c.a, c.b}; }

tsing_census* wrap_records(std::vector<tsing::CensusRecord> records) {
  auto* c = new tsing_census{std::move(records), {}};
  c->strings.reserve(c->records.size());
  for (const auto& r : c->records) c->strings.push_back({r.tstring});
  return c;
}

tsing_status copy_ints(const std::vector<std::int64_t>& src, int64_t* buffer, size_t capacity) {
  if (capacity < src.size()) return fail(TSING_BUFFER_TOO_SMALL, "buffer too small");
  if (!src.empty() && !buffer) return fail(TSING_INVALID_ARGUMENT, "buffer must not be null");
  for (size_t i = 0; i < src.size(); ++i) buffer[i] = src[i];
  return TSING_OK;
}

}  // namespace

extern "C" {

const char* tsing_last_error(void) { return g_last_error.c_str(); }

const char* tsing_version(void) { return "0.1.0"; }

/* ---- strings ---- */

tsing_status tsing_tstring_create(const int64_t* entries, size_t length, tsing_tstring** out) {
  TSING_REQUIRE(out);
  if (length > 0) TSING_REQUIRE(entries);
  return guarded([&] {
    *out = new tsing_tstring{tsing::TString(std::vector<std::int64_t>(entries, entries + length))};
    return TSING_OK;
  });
}

void tsing_tstring_free(tsing_tstring* s) { delete s; }

size_t tsing_tstring_length(const tsing_tstring* s) { return s ? s->value.length() : 0; }

tsing_status tsing_tstring_entries(const tsing_tstring* s, int64_t* buffer, size_t capacity) {
  TSING_REQUIRE(s);
  const auto e = s->value.entries();
  return copy_ints(std::vector<std::int64_t>(e.begin(), e.end()), buffer, capacity);
}

tsing_status tsing_hj_expand(int64_t order, int64_t weight, tsing_tstring** out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = new tsing_tstring{tsing::expand(order, weight)};
    return TSING_OK;
  });
}

tsing_status tsing_hj_evaluate(const tsing_tstring* s, int64_t* order, int64_t* weight) {
  TSING_REQUIRE(s);
  TSING_REQUIRE(order);
  TSING_REQUIRE(weight);
  return guarded([&] {
    const auto q = tsing::evaluate(s->value);
    *order = q.order;
    *weight = q.weight;
    return TSING_OK;
  });
}

tsing_status tsing_hj_classify(const tsing_tstring* s, tsing_string_class* out) {
  TSING_REQUIRE(s);
  TSING_REQUIRE(out);
  return guarded([&] {
    const auto cls = tsing::classify_string(s->value);
    *out = {};
    switch (cls.kind) {
      case tsing::StringKind::RationalDoublePoint: out->kind = TSING_RATIONAL_DOUBLE_POINT; break;
      case tsing::StringKind::NotT: out->kind = TSING_NOT_T; break;
      case tsing::StringKind::NonCanonicalT:
        out->kind = TSING_NONCANONICAL_T;
        out->d = cls.type->d();
        out->n = cls.type->n();
        out->a = cls.type->a();
        break;
    }
    return TSING_OK;
  });
}

tsing_status tsing_hj_iterate_left(const tsing_tstring* s, tsing_tstring** out) {
  TSING_REQUIRE(s);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = new tsing_tstring{tsing::iterate_left(s->value)};
    return TSING_OK;
  });
}

tsing_status tsing_hj_iterate_right(const tsing_tstring* s, tsing_tstring** out) {
  TSING_REQUIRE(s);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = new tsing_tstring{tsing::iterate_right(s->value)};
    return TSING_OK;
  });
}

namespace {

tsing_tstring_list* wrap_strings(const std::vector<tsing::TString>& v) {
  auto* list = new tsing_tstring_list;
  list->items.reserve(v.size());
  for (const auto& s : v) list->items.push_back({s});
  return list;
}

}  // namespace

tsing_status tsing_hj_seeds_index2(int64_t d_max, tsing_tstring_list** out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = wrap_strings(tsing::seeds_index2(d_max));
    return TSING_OK;
  });
}

tsing_status tsing_hj_generate(int level, int64_t d_max, tsing_tstring_list** out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = wrap_strings(tsing::generate(level, d_max));
    return TSING_OK;
  });
}

size_t tsing_tstring_list_size(const tsing_tstring_list* list) { return list ? list->items.size() : 0; }

const tsing_tstring* tsing_tstring_list_at(const tsing_tstring_list* list, size_t index) {
  if (!list || index >= list->items.size()) return nullptr;
  return &list->items[index];
}

void tsing_tstring_list_free(tsing_tstring_list* list) { delete list; }

/* ---- lattices ---- */

tsing_status tsing_lattice_from_chain(const tsing_tstring* s, int64_t chi, int64_t k_self, tsing_lattice** out) {
  TSING_REQUIRE(s);
  TSING_REQUIRE(out);
  return guarded([&] {
    auto cfg = tsing::chain_config(s->value, chi, k_self);
    auto delta = tsing::discrepancies(cfg);
    *out = new tsing_lattice{std::move(cfg), std::move(delta)};
    return TSING_OK;
  });
}

tsing_status tsing_lattice_create(size_t rank, const int64_t* gram, const int64_t* k_degrees, int64_t chi,
                                  int64_t k_self, tsing_lattice** out) {
  TSING_REQUIRE(out);
  if (rank == 0) return fail(TSING_DOMAIN_ERROR, "lattice rank must be positive");
  TSING_REQUIRE(gram);
  TSING_REQUIRE(k_degrees);
  return guarded([&] {
    tsing::ExceptionalConfig cfg;
    cfg.gram = tsing::IntMatrix(rank, rank);
    for (size_t i = 0; i < rank; ++i) {
      cfg.curve_names.push_back("E" + std::to_string(i + 1));
      for (size_t j = 0; j < rank; ++j) cfg.gram(i, j) = gram[i * rank + j];
      cfg.k_degrees.push_back(k_degrees[i]);
    }
    cfg.chi = chi;
    cfg.k_self = k_self;
    auto delta = tsing::discrepancies(cfg);
    *out = new tsing_lattice{std::move(cfg), std::move(delta)};
    return TSING_OK;
  });
}

void tsing_lattice_free(tsing_lattice* lat) { delete lat; }

size_t tsing_lattice_rank(const tsing_lattice* lat) { return lat ? lat->config.rank() : 0; }

tsing_status tsing_lattice_discrepancies(const tsing_lattice* lat, tsing_rational* buffer, size_t capacity) {
  TSING_REQUIRE(lat);
  const auto& c = lat->delta.coeffs;
  if (capacity < c.size()) return fail(TSING_BUFFER_TOO_SMALL, "buffer too small");
  TSING_REQUIRE(buffer);
  for (size_t i = 0; i < c.size(); ++i) buffer[i] = to_c(c[i]);
  return TSING_OK;
}

tsing_status tsing_lattice_cartier_index(const tsing_lattice* lat, int64_t* out) {
  TSING_REQUIRE(lat);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::cartier_index(lat->delta);
    return TSING_OK;
  });
}

tsing_status tsing_lattice_kx_squared(const tsing_lattice* lat, tsing_rational* out) {
  TSING_REQUIRE(lat);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::kx_squared(lat->config, lat->delta));
    return TSING_OK;
  });
}

tsing_status tsing_lattice_correction_term(const tsing_lattice* lat, int64_t m, tsing_rational* out) {
  TSING_REQUIRE(lat);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::correction_term(lat->config, lat->delta, m));
    return TSING_OK;
  });
}

tsing_status tsing_lattice_plurigenus(const tsing_lattice* lat, tsing_rational k2_x, int64_t m, tsing_rational* out) {
  TSING_REQUIRE(lat);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::plurigenus(lat->config.chi, from_c(k2_x), lat->config, lat->delta, m));
    return TSING_OK;
  });
}

tsing_status tsing_k2_resolution(tsing_rational k2_x, int64_t r, int64_t d, tsing_rational* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::k2_resolution(from_c(k2_x), r, d));
    return TSING_OK;
  });
}

tsing_status tsing_riemann_roch(int64_t chi, tsing_rational l_self, tsing_rational k_dot_l, tsing_rational* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::riemann_roch(chi, from_c(l_self), from_c(k_dot_l)));
    return TSING_OK;
  });
}

/* ---- Hirzebruch surfaces ---- */

tsing_status tsing_fn_from_sigma0(int64_t n, int64_t x, int64_t y, tsing_fn_class* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::FnClass::from_sigma0(n, x, y));
    return TSING_OK;
  });
}

tsing_status tsing_fn_intersect(tsing_fn_class c1, tsing_fn_class c2, int64_t* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::intersect(from_c(c1), from_c(c2));
    return TSING_OK;
  });
}

tsing_status tsing_fn_canonical_class(int64_t n, tsing_fn_class* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = to_c(tsing::canonical_class(n));
    return TSING_OK;
  });
}

tsing_status tsing_fn_h0(tsing_fn_class c, int64_t* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::h0(from_c(c));
    return TSING_OK;
  });
}

tsing_status tsing_fn_aut_dim(int64_t n, int64_t* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::aut_dim(n);
    return TSING_OK;
  });
}

tsing_status tsing_fn_arithmetic_genus(tsing_fn_class c, int64_t* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::arithmetic_genus(from_c(c));
    return TSING_OK;
  });
}

tsing_status tsing_fn_d_bound(tsing_fn_class branch, int64_t* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::d_bound(from_c(branch));
    return TSING_OK;
  });
}

tsing_status tsing_fn_double_cover(tsing_fn_class branch, tsing_cover_invariants* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    const auto inv = tsing::double_cover(from_c(branch));
    *out = {inv.chi, inv.k_self, inv.p_g, inv.q, to_c(inv.adjoint)};
    return TSING_OK;
  });
}

tsing_status tsing_fn_splittings(tsing_fn_class total, tsing_splitting* buffer, size_t capacity, size_t* count) {
  TSING_REQUIRE(count);
  return guarded([&] {
    const auto splits = tsing::enumerate_splittings(from_c(total));
    *count = splits.size();
    if (capacity < splits.size()) return fail(TSING_BUFFER_TOO_SMALL, "buffer too small");
    if (!splits.empty() && !buffer) return fail(TSING_INVALID_ARGUMENT, "buffer must not be null");
    for (size_t i = 0; i < splits.size(); ++i) {
      buffer[i] = {to_c(splits[i].first), to_c(splits[i].second), splits[i].m, splits[i].d};
    }
    return TSING_OK;
  });
}

tsing_status tsing_fn_moduli_count(tsing_moduli_case c, int64_t d, int64_t* out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    tsing::ModuliCase mc;
    switch (c) {
      case TSING_MODULI_GENERIC: mc = tsing::ModuliCase::Generic; break;
      case TSING_MODULI_R1: mc = tsing::ModuliCase::R1; break;
      case TSING_MODULI_R2: mc = tsing::ModuliCase::R2; break;
      case TSING_MODULI_R3: mc = tsing::ModuliCase::R3; break;
      default: return fail(TSING_DOMAIN_ERROR, "unsupported moduli case");
    }
    *out = tsing::moduli_count(mc, d);
    return TSING_OK;
  });
}

/* ---- Hilbert series ---- */

tsing_status tsing_hilbert_create(const int64_t* weights, size_t n_weights, const int64_t* relations,
                                  size_t n_relations, tsing_hilbert** out) {
  TSING_REQUIRE(out);
  if (n_weights > 0) TSING_REQUIRE(weights);
  if (n_relations > 0) TSING_REQUIRE(relations);
  return guarded([&] {
    *out = new tsing_hilbert{tsing::series(std::vector<std::int64_t>(weights, weights + n_weights),
                                           std::vector<std::int64_t>(relations, relations + n_relations))};
    return TSING_OK;
  });
}

void tsing_hilbert_free(tsing_hilbert* h) { delete h; }

tsing_status tsing_hilbert_coefficient(const tsing_hilbert* h, int64_t m, int64_t* out) {
  TSING_REQUIRE(h);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = h->value.coefficient(m);
    return TSING_OK;
  });
}

tsing_status tsing_hilbert_equal(const tsing_hilbert* h1, const tsing_hilbert* h2, int* out) {
  TSING_REQUIRE(h1);
  TSING_REQUIRE(h2);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::equal(h1->value, h2->value) ? 1 : 0;
    return TSING_OK;
  });
}

tsing_status tsing_hilbert_matches_plurigenera(const tsing_hilbert* h, int64_t chi, tsing_rational k2, int64_t m_max,
                                               int* out) {
  TSING_REQUIRE(h);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = tsing::matches_plurigenera(h->value, chi, from_c(k2), m_max) ? 1 : 0;
    return TSING_OK;
  });
}

size_t tsing_hilbert_weight_count(const tsing_hilbert* h) { return h ? h->value.weights().size() : 0; }
size_t tsing_hilbert_relation_count(const tsing_hilbert* h) { return h ? h->value.relations().size() : 0; }

tsing_status tsing_hilbert_weights(const tsing_hilbert* h, int64_t* buffer, size_t capacity) {
  TSING_REQUIRE(h);
  return copy_ints(h->value.weights(), buffer, capacity);
}

tsing_status tsing_hilbert_relations(const tsing_hilbert* h, int64_t* buffer, size_t capacity) {
  TSING_REQUIRE(h);
  return copy_ints(h->value.relations(), buffer, capacity);
}

/* ---- census ---- */

tsing_status tsing_census_candidates(int level, int64_t d_max, tsing_census** out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = wrap_records(tsing::enumerate_candidates(level, d_max));
    return TSING_OK;
  });
}

tsing_status tsing_census_filter(const tsing_census* pending, tsing_census** out) {
  TSING_REQUIRE(pending);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = wrap_records(tsing::apply_filters(pending->records));
    return TSING_OK;
  });
}

tsing_status tsing_census_run(int max_level, int64_t d_max, tsing_census** out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = wrap_records(tsing::run_census(max_level, d_max));
    return TSING_OK;
  });
}

tsing_status tsing_census_main_theorem(tsing_census** out) {
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = wrap_records(tsing::main_theorem_table());
    return TSING_OK;
  });
}

void tsing_census_free(tsing_census* c) { delete c; }

size_t tsing_census_size(const tsing_census* c) { return c ? c->records.size() : 0; }

#define TSING_REQUIRE_RECORD(c, i)                                  \
  TSING_REQUIRE(c);                                                 \
  if ((i) >= (c)->records.size()) return fail(TSING_INVALID_ARGUMENT, "record index out of range")

tsing_status tsing_census_record(const tsing_census* c, size_t i, tsing_record_info* out) {
  TSING_REQUIRE_RECORD(c, i);
  TSING_REQUIRE(out);
  return guarded([&] {
    const auto& r = c->records[i];
    *out = {};
    out->cartier_index = r.cartier_index;
    out->d = r.quotient.d();
    out->n = r.quotient.n();
    out->a = r.quotient.a();
    out->order = r.quotient.order();
    out->weight = r.quotient.weight();
    out->level = r.level;
    out->k2_resolution = r.k2_resolution;
    out->verdict = static_cast<tsing_verdict>(r.verdict);
    out->has_moduli = r.moduli_dim.has_value();
    out->moduli_dim = r.moduli_dim.value_or(0);
    out->component = static_cast<tsing_component>(r.component.kind);
    out->codim = r.component.codim;
    out->family_d_max = r.family_d_max.value_or(0);
    out->cited = r.reason && r.reason->cited;
    return TSING_OK;
  });
}

const tsing_tstring* tsing_census_record_string(const tsing_census* c, size_t i) {
  if (!c || i >= c->strings.size()) return nullptr;
  return &c->strings[i];
}

const char* tsing_census_record_construction(const tsing_census* c, size_t i) {
  if (!c || i >= c->records.size()) return "";
  return c->records[i].construction.c_str();
}

const char* tsing_census_record_note(const tsing_census* c, size_t i) {
  if (!c || i >= c->records.size()) return "";
  return c->records[i].note.c_str();
}

const char* tsing_census_record_reason(const tsing_census* c, size_t i) {
  if (!c || i >= c->records.size() || !c->records[i].reason) return "";
  return c->records[i].reason->quote.c_str();
}

const char* tsing_census_record_reason_anchor(const tsing_census* c, size_t i) {
  if (!c || i >= c->records.size() || !c->records[i].reason) return "";
  return c->records[i].reason->anchor.c_str();
}

size_t tsing_census_record_smoothability_count(const tsing_census* c, size_t i) {
  if (!c || i >= c->records.size()) return 0;
  return c->records[i].smoothable.size();
}

tsing_status tsing_census_record_smoothability(const tsing_census* c, size_t i, size_t j, tsing_smoothability* value,
                                               const char** variant) {
  TSING_REQUIRE_RECORD(c, i);
  TSING_REQUIRE(value);
  TSING_REQUIRE(variant);
  const auto& entries = c->records[i].smoothable;
  if (j >= entries.size()) return fail(TSING_INVALID_ARGUMENT, "smoothability index out of range");
  *value = static_cast<tsing_smoothability>(entries[j].value);
  *variant = entries[j].variant.c_str();
  return TSING_OK;
}

size_t tsing_reason_count(void) { return tsing::reason_table().size(); }

tsing_status tsing_reason_at(size_t i, const char** anchor, const char** quote, int* cited) {
  TSING_REQUIRE(anchor);
  TSING_REQUIRE(quote);
  TSING_REQUIRE(cited);
  const auto& table = tsing::reason_table();
  if (i >= table.size()) return fail(TSING_INVALID_ARGUMENT, "reason index out of range");
  *anchor = table[i].anchor.c_str();
  *quote = table[i].quote.c_str();
  *cited = table[i].cited ? 1 : 0;
  return TSING_OK;
}

namespace {

const std::vector<tsing::LemmaRow>& lemma_rows() {
  static const std::vector<tsing::LemmaRow> rows = tsing::lemma_table();
  return rows;
}

}  // namespace

size_t tsing_lemma_row_count(void) {
  try {
    return lemma_rows().size();
  } catch (...) {
    return 0;
  }
}

tsing_status tsing_lemma_row_at(size_t i, tsing_lemma_row* out, const char** singularity, const char** strings_label) {
  TSING_REQUIRE(out);
  TSING_REQUIRE(singularity);
  TSING_REQUIRE(strings_label);
  return guarded([&] {
    const auto& rows = lemma_rows();
    if (i >= rows.size()) return fail(TSING_INVALID_ARGUMENT, "lemma row index out of range");
    *out = {rows[i].level, rows[i].n, rows[i].k2_resolution};
    *singularity = rows[i].singularity.c_str();
    *strings_label = rows[i].strings_label.c_str();
    return TSING_OK;
  });
}

tsing_status tsing_census_verify(const tsing_census* c, size_t i, tsing_report** out) {
  TSING_REQUIRE_RECORD(c, i);
  TSING_REQUIRE(out);
  return guarded([&] {
    *out = new tsing_report{tsing::verify_construction(c->records[i])};
    return TSING_OK;
  });
}

void tsing_report_free(tsing_report* r) { delete r; }

size_t tsing_report_size(const tsing_report* r) { return r ? r->value.checks.size() : 0; }

int tsing_report_all_passed(const tsing_report* r) { return r && r->value.all_passed() ? 1 : 0; }

tsing_status tsing_report_check(const tsing_report* r, size_t i, const char** name, int* passed, const char** expected,
                                const char** actual) {
  TSING_REQUIRE(r);
  TSING_REQUIRE(name);
  TSING_REQUIRE(passed);
  TSING_REQUIRE(expected);
  TSING_REQUIRE(actual);
  if (i >= r->value.checks.size()) return fail(TSING_INVALID_ARGUMENT, "check index out of range");
  const auto& c = r->value.checks[i];
  *name = c.name.c_str();
  *passed = c.passed ? 1 : 0;
  *expected = c.expected.c_str();
  *actual = c.actual.c_str();
  return TSING_OK;
}

}  // extern "C"
