// tsing: command-line frontend over the tsing C API.

#include <algorithm>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tsing/tsing.h"

namespace {

using json = nlohmann::ordered_json;

// Domain or argument failure: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(tsing_status s) {
  if (s == TSING_OK) return;
  if (s == TSING_INTERNAL_ERROR) throw std::runtime_error(tsing_last_error());
  throw UsageError(tsing_last_error());
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};

using StringPtr = std::unique_ptr<tsing_tstring, Deleter<tsing_tstring, tsing_tstring_free>>;
using ListPtr = std::unique_ptr<tsing_tstring_list, Deleter<tsing_tstring_list, tsing_tstring_list_free>>;
using LatticePtr = std::unique_ptr<tsing_lattice, Deleter<tsing_lattice, tsing_lattice_free>>;
using HilbertPtr = std::unique_ptr<tsing_hilbert, Deleter<tsing_hilbert, tsing_hilbert_free>>;
using CensusPtr = std::unique_ptr<tsing_census, Deleter<tsing_census, tsing_census_free>>;
using ReportPtr = std::unique_ptr<tsing_report, Deleter<tsing_report, tsing_report_free>>;

// ---------------------------------------------------------------------------
// formatting

std::string rat_text(tsing_rational r) {
  return r.den == 1 ? std::to_string(r.num) : std::to_string(r.num) + "/" + std::to_string(r.den);
}

json rat_json(tsing_rational r) { return {{"num", r.num}, {"den", r.den}}; }

std::vector<int64_t> entries_of(const tsing_tstring* s) {
  std::vector<int64_t> e(tsing_tstring_length(s));
  check(tsing_tstring_entries(s, e.data(), e.size()));
  return e;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string list_text(const std::vector<int64_t>& v) {
  std::vector<std::string> parts;
  for (auto x : v) parts.push_back(std::to_string(x));
  return "[" + join(parts, ",") + "]";
}

std::string quotient_text(int64_t order, int64_t weight) {
  return "1/" + std::to_string(order) + "(1," + std::to_string(weight) + ")";
}

// Classes on F_n are shown in sigma0 coordinates: x s0 + y G.
std::string class_text(tsing_fn_class c) {
  const int64_t x = c.b;
  const int64_t y = c.a - c.n * c.b;
  std::string out;
  auto term = [&](int64_t coeff, const char* sym) {
    if (coeff == 0) return;
    if (!out.empty()) out += coeff > 0 ? "+" : "-";
    else if (coeff < 0) out += "-";
    const int64_t mag = coeff < 0 ? -coeff : coeff;
    if (mag != 1) out += std::to_string(mag);
    out += sym;
  };
  term(x, "s0");
  term(y, "G");
  return out.empty() ? "0" : out;
}

json class_json(tsing_fn_class c) {
  return {{"n", c.n}, {"s0", c.b}, {"G", c.a - c.n * c.b}, {"text", class_text(c)}};
}

// ---------------------------------------------------------------------------
// C API helpers

StringPtr make_string(const std::vector<int64_t>& entries) {
  tsing_tstring* s = nullptr;
  check(tsing_tstring_create(entries.data(), entries.size(), &s));
  return StringPtr(s);
}

HilbertPtr make_hilbert(const std::vector<int64_t>& weights, const std::vector<int64_t>& relations) {
  tsing_hilbert* h = nullptr;
  check(tsing_hilbert_create(weights.data(), weights.size(), relations.data(), relations.size(), &h));
  return HilbertPtr(h);
}

int64_t lattice_default_k_self(const std::vector<int64_t>& entries) {
  auto s = make_string(entries);
  tsing_string_class cls{};
  check(tsing_hj_classify(s.get(), &cls));
  if (cls.kind != TSING_NONCANONICAL_T) {
    throw UsageError("--k-self is required for strings that are not non-canonical T-strings");
  }
  tsing_rational k2{};
  check(tsing_k2_resolution({1, 1}, static_cast<int64_t>(entries.size()), cls.d, &k2));
  return k2.num;
}

LatticePtr make_lattice(const std::vector<int64_t>& entries, int64_t chi, std::optional<int64_t> k_self) {
  auto s = make_string(entries);
  const int64_t ks = k_self ? *k_self : lattice_default_k_self(entries);
  tsing_lattice* lat = nullptr;
  check(tsing_lattice_from_chain(s.get(), chi, ks, &lat));
  return LatticePtr(lat);
}

tsing_fn_class parse_class(int64_t n, const std::vector<int64_t>& xy) {
  if (xy.size() != 2) throw UsageError("--class expects X,Y");
  tsing_fn_class c{};
  check(tsing_fn_from_sigma0(n, xy[0], xy[1], &c));
  return c;
}

const char* verdict_name(tsing_verdict v) {
  switch (v) {
    case TSING_VERDICT_PENDING: return "pending";
    case TSING_VERDICT_ADMITTED: return "admitted";
    case TSING_VERDICT_EXCLUDED: return "excluded";
    case TSING_VERDICT_UNRESOLVED: return "unresolved";
  }
  return "?";
}

const char* component_name(tsing_component c) {
  switch (c) {
    case TSING_COMPONENT_MAIN_DIVISOR: return "main-component-divisor";
    case TSING_COMPONENT_MAIN_CODIM: return "main-component-codim";
    case TSING_COMPONENT_NEW: return "new-component";
    case TSING_COMPONENT_NOT_APPLICABLE: return "not-applicable";
  }
  return "?";
}

const char* smooth_name(tsing_smoothability s) {
  switch (s) {
    case TSING_SMOOTHABLE_YES: return "yes";
    case TSING_SMOOTHABLE_NO: return "no";
    case TSING_SMOOTHABLE_CONJECTURAL: return "conjectural";
  }
  return "?";
}

std::string singularity_label(const tsing_record_info& r) {
  if (r.family_d_max > 0) return "1/4d(1,2d-1) (d<=" + std::to_string(r.family_d_max) + ")";
  return quotient_text(r.order, r.weight);
}

json record_json(const tsing_census* c, size_t i) {
  tsing_record_info r{};
  check(tsing_census_record(c, i, &r));
  json j;
  j["cartier_index"] = r.cartier_index;
  j["singularity"] = quotient_text(r.order, r.weight);
  j["order"] = r.order;
  j["weight"] = r.weight;
  j["d"] = r.d;
  j["n"] = r.n;
  j["a"] = r.a;
  j["tstring"] = entries_of(tsing_census_record_string(c, i));
  j["level"] = r.level;
  j["k2_resolution"] = r.k2_resolution;
  j["verdict"] = verdict_name(r.verdict);
  if (r.verdict == TSING_VERDICT_EXCLUDED) {
    j["reason"] = {{"anchor", tsing_census_record_reason_anchor(c, i)},
                   {"quote", tsing_census_record_reason(c, i)},
                   {"cited", static_cast<bool>(r.cited)}};
  } else {
    j["reason"] = nullptr;
  }
  j["construction"] = tsing_census_record_construction(c, i);
  j["note"] = tsing_census_record_note(c, i);
  j["moduli_dim"] = r.has_moduli ? json(r.moduli_dim) : json(nullptr);
  j["component"] = {{"kind", component_name(r.component)}, {"codim", r.codim}};
  json smooth = json::array();
  for (size_t k = 0; k < tsing_census_record_smoothability_count(c, i); ++k) {
    tsing_smoothability v{};
    const char* variant = nullptr;
    check(tsing_census_record_smoothability(c, i, k, &v, &variant));
    smooth.push_back({{"variant", variant}, {"value", smooth_name(v)}});
  }
  j["smoothable"] = smooth;
  j["family_d_max"] = r.family_d_max > 0 ? json(r.family_d_max) : json(nullptr);
  return j;
}

// ---------------------------------------------------------------------------
// output

enum class Format { Text, Json, Md };

struct Output {
  std::string command;
  json inputs = json::object();
  json result;
  json citations = json::array();
  std::string text;      // rendering for --format text
  std::string markdown;  // empty: fall back to text
};

Output make_output(std::string command) {
  Output o;
  o.command = std::move(command);
  return o;
}

std::string render(const Output& o, Format f) {
  switch (f) {
    case Format::Json: {
      json env;
      env["command"] = o.command;
      env["inputs"] = o.inputs;
      env["result"] = o.result;
      env["citations"] = o.citations;
      return env.dump(2) + "\n";
    }
    case Format::Md:
      return o.markdown.empty() ? o.text : o.markdown;
    case Format::Text:
      break;
  }
  return o.text;
}

// ---------------------------------------------------------------------------
// commands

Output cmd_hj_expand(int64_t order, int64_t weight) {
  tsing_tstring* raw = nullptr;
  check(tsing_hj_expand(order, weight, &raw));
  StringPtr s(raw);
  const auto e = entries_of(s.get());
  Output o = make_output("hj expand");
  o.inputs = {{"N", order}, {"Q", weight}};
  o.result = {{"tstring", e}};
  o.text = list_text(e) + "\n";
  return o;
}

Output cmd_hj_eval(const std::vector<int64_t>& entries) {
  auto s = make_string(entries);
  int64_t order = 0, weight = 0;
  check(tsing_hj_evaluate(s.get(), &order, &weight));
  Output o = make_output("hj eval");
  o.inputs = {{"tstring", entries}};
  o.result = {{"order", order}, {"weight", weight}, {"quotient", quotient_text(order, weight)}};
  o.text = quotient_text(order, weight) + "\n";
  return o;
}

Output cmd_hj_classify(const std::vector<int64_t>& entries) {
  auto s = make_string(entries);
  tsing_string_class cls{};
  check(tsing_hj_classify(s.get(), &cls));
  Output o = make_output("hj classify");
  o.inputs = {{"tstring", entries}};
  switch (cls.kind) {
    case TSING_RATIONAL_DOUBLE_POINT:
      o.result = {{"kind", "rational-double-point"}};
      o.text = "rational double point\n";
      break;
    case TSING_NOT_T:
      o.result = {{"kind", "not-t"}};
      o.text = "not a T-singularity\n";
      break;
    case TSING_NONCANONICAL_T: {
      o.result = {{"kind", "t-singularity"}, {"d", cls.d}, {"n", cls.n}, {"a", cls.a}};
      o.text = "T-singularity d=" + std::to_string(cls.d) + " n=" + std::to_string(cls.n) +
               " a=" + std::to_string(cls.a) + "\n";
      break;
    }
  }
  return o;
}

Output cmd_hj_iterate(const std::string& side, const std::vector<int64_t>& entries) {
  auto s = make_string(entries);
  tsing_tstring* raw = nullptr;
  if (side == "left") check(tsing_hj_iterate_left(s.get(), &raw));
  else check(tsing_hj_iterate_right(s.get(), &raw));
  StringPtr next(raw);
  const auto e = entries_of(next.get());
  Output o = make_output("hj iterate");
  o.inputs = {{"side", side}, {"tstring", entries}};
  o.result = {{"tstring", e}};
  o.text = list_text(e) + "\n";
  return o;
}

Output string_list_output(std::string command, json inputs, tsing_tstring_list* raw) {
  ListPtr list(raw);
  Output o = make_output(std::move(command));
  o.inputs = std::move(inputs);
  json arr = json::array();
  for (size_t i = 0; i < tsing_tstring_list_size(list.get()); ++i) {
    const auto e = entries_of(tsing_tstring_list_at(list.get(), i));
    arr.push_back(e);
    o.text += list_text(e) + "\n";
  }
  o.result = {{"count", arr.size()}, {"tstrings", arr}};
  return o;
}

Output cmd_tstring_generate(int level, int64_t d_max) {
  tsing_tstring_list* raw = nullptr;
  check(tsing_hj_generate(level, d_max, &raw));
  return string_list_output("tstring generate", {{"level", level}, {"dmax", d_max}}, raw);
}

Output cmd_tstring_seeds(int64_t d_max) {
  tsing_tstring_list* raw = nullptr;
  check(tsing_hj_seeds_index2(d_max, &raw));
  return string_list_output("tstring seeds", {{"dmax", d_max}}, raw);
}

Output cmd_discrepancy(const std::vector<int64_t>& entries, int64_t chi, std::optional<int64_t> k_self) {
  auto lat = make_lattice(entries, chi, k_self);
  std::vector<tsing_rational> delta(tsing_lattice_rank(lat.get()));
  check(tsing_lattice_discrepancies(lat.get(), delta.data(), delta.size()));
  int64_t index = 0;
  check(tsing_lattice_cartier_index(lat.get(), &index));
  tsing_rational k2{};
  check(tsing_lattice_kx_squared(lat.get(), &k2));

  Output o = make_output("discrepancy");
  o.inputs = {{"tstring", entries}, {"chi", chi}};
  o.inputs["k_self"] = k_self ? json(*k_self) : json(nullptr);
  json dj = json::array();
  std::vector<std::string> dt;
  for (auto r : delta) {
    dj.push_back(rat_json(r));
    dt.push_back(rat_text(r));
  }
  o.result = {{"discrepancies", dj}, {"cartier_index", index}, {"kx_squared", rat_json(k2)}};
  o.text = "discrepancies: (" + join(dt, ", ") + ")\ncartier index: " + std::to_string(index) +
           "\nK_X^2: " + rat_text(k2) + "\n";
  return o;
}

Output cmd_plurigenus(const std::vector<int64_t>& entries, int64_t m_min, int64_t m_max, int64_t chi,
                      std::optional<int64_t> k_self) {
  if (m_max < m_min) m_max = m_min;
  auto lat = make_lattice(entries, chi, k_self);
  tsing_rational k2{};
  check(tsing_lattice_kx_squared(lat.get(), &k2));
  Output o = make_output("plurigenus");
  o.inputs = {{"tstring", entries}, {"m", m_min}, {"m_max", m_max}, {"chi", chi}};
  o.inputs["k_self"] = k_self ? json(*k_self) : json(nullptr);
  json rows = json::array();
  o.markdown = "| m | P_m | correction |\n|---|---|---|\n";
  for (int64_t m = m_min; m <= m_max; ++m) {
    tsing_rational p{}, corr{};
    check(tsing_lattice_plurigenus(lat.get(), k2, m, &p));
    check(tsing_lattice_correction_term(lat.get(), m, &corr));
    rows.push_back({{"m", m}, {"plurigenus", rat_json(p)}, {"correction", rat_json(corr)}});
    o.text += "P_" + std::to_string(m) + " = " + rat_text(p) + " (correction " + rat_text(corr) + ")\n";
    o.markdown += "| " + std::to_string(m) + " | " + rat_text(p) + " | " + rat_text(corr) + " |\n";
  }
  o.result = {{"kx_squared", rat_json(k2)}, {"values", rows}};
  return o;
}

struct HilbertArgs {
  std::vector<int64_t> weights;
  std::vector<int64_t> relations;
  std::optional<int64_t> coeff;
  std::optional<int64_t> upto;
  std::vector<int64_t> compare_weights;
  std::vector<int64_t> compare_relations;
  bool compare = false;
  bool plurigenera = false;
  int64_t chi = 3;
  std::string k2 = "1";
  int64_t m_max = 20;
};

tsing_rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    size_t used = 0;
    if (slash == std::string::npos) {
      const int64_t v = std::stoll(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {v, 1};
    }
    const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
    const int64_t num = std::stoll(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const int64_t den = std::stoll(b, &used);
    if (used != b.size() || den <= 0) throw std::invalid_argument(s);
    return {num, den};
  } catch (const std::logic_error&) {
    throw UsageError("invalid rational: " + s);
  }
}

Output cmd_hilbert(const HilbertArgs& a) {
  auto h = make_hilbert(a.weights, a.relations);
  Output o = make_output("hilbert");
  o.inputs = {{"weights", a.weights}, {"relations", a.relations}};
  json result = json::object();
  std::vector<int64_t> w(tsing_hilbert_weight_count(h.get())), r(tsing_hilbert_relation_count(h.get()));
  check(tsing_hilbert_weights(h.get(), w.data(), w.size()));
  check(tsing_hilbert_relations(h.get(), r.data(), r.size()));
  result["reduced"] = {{"weights", w}, {"relations", r}};
  if (a.coeff) {
    int64_t c = 0;
    check(tsing_hilbert_coefficient(h.get(), *a.coeff, &c));
    o.inputs["coeff"] = *a.coeff;
    result["coefficient"] = {{"m", *a.coeff}, {"value", c}};
    o.text += std::to_string(c) + "\n";
  }
  if (a.upto) {
    if (*a.upto < 0) throw UsageError("--upto must be >= 0");
    o.inputs["upto"] = *a.upto;
    json cs = json::array();
    std::vector<std::string> parts;
    for (int64_t m = 0; m <= *a.upto; ++m) {
      int64_t c = 0;
      check(tsing_hilbert_coefficient(h.get(), m, &c));
      cs.push_back(c);
      parts.push_back(std::to_string(c));
    }
    result["coefficients"] = cs;
    o.text += join(parts, " ") + "\n";
  }
  if (a.compare) {
    auto other = make_hilbert(a.compare_weights, a.compare_relations);
    int eq = 0;
    check(tsing_hilbert_equal(h.get(), other.get(), &eq));
    o.inputs["compare"] = {{"weights", a.compare_weights}, {"relations", a.compare_relations}};
    result["equal"] = static_cast<bool>(eq);
    o.text += std::string("equal: ") + (eq ? "true" : "false") + "\n";
  }
  if (a.plurigenera) {
    const tsing_rational k2 = parse_rational(a.k2);
    int ok = 0;
    check(tsing_hilbert_matches_plurigenera(h.get(), a.chi, k2, a.m_max, &ok));
    o.inputs["plurigenera"] = {{"chi", a.chi}, {"k2", rat_json(k2)}, {"m_max", a.m_max}};
    result["matches_plurigenera"] = static_cast<bool>(ok);
    o.text += std::string("matches plurigenera: ") + (ok ? "true" : "false") + "\n";
  }
  if (o.text.empty()) {
    std::vector<std::string> parts;
    for (int64_t m = 0; m <= 10; ++m) {
      int64_t c = 0;
      check(tsing_hilbert_coefficient(h.get(), m, &c));
      parts.push_back(std::to_string(c));
    }
    o.text = join(parts, " ") + " ...\n";
  }
  o.result = result;
  return o;
}

Output cmd_fn(const std::string& op, int64_t n, const std::vector<int64_t>& cls, const std::vector<int64_t>& with,
              const std::string& moduli_case, int64_t d) {
  Output o = make_output("fn " + op);
  o.inputs = {{"n", n}};
  auto need_class = [&]() {
    if (cls.empty()) throw UsageError("--class is required");
    o.inputs["class"] = cls;
    return parse_class(n, cls);
  };
  if (op == "intersect") {
    const auto c1 = need_class();
    if (with.empty()) throw UsageError("--with is required");
    o.inputs["with"] = with;
    const auto c2 = parse_class(n, with);
    int64_t v = 0;
    check(tsing_fn_intersect(c1, c2, &v));
    o.result = {{"intersection", v}};
    o.text = std::to_string(v) + "\n";
  } else if (op == "h0") {
    const auto c = need_class();
    int64_t v = 0;
    check(tsing_fn_h0(c, &v));
    o.result = {{"class", class_json(c)}, {"h0", v}};
    o.text = std::to_string(v) + "\n";
  } else if (op == "genus") {
    const auto c = need_class();
    int64_t v = 0;
    check(tsing_fn_arithmetic_genus(c, &v));
    o.result = {{"class", class_json(c)}, {"arithmetic_genus", v}};
    o.text = std::to_string(v) + "\n";
  } else if (op == "dbound") {
    const auto c = need_class();
    int64_t v = 0;
    check(tsing_fn_d_bound(c, &v));
    o.result = {{"class", class_json(c)}, {"d_bound", v}};
    o.text = std::to_string(v) + "\n";
  } else if (op == "canonical") {
    tsing_fn_class k{};
    check(tsing_fn_canonical_class(n, &k));
    o.result = {{"canonical_class", class_json(k)}};
    o.text = class_text(k) + "\n";
  } else if (op == "aut") {
    int64_t v = 0;
    check(tsing_fn_aut_dim(n, &v));
    o.result = {{"aut_dim", v}};
    o.text = std::to_string(v) + "\n";
  } else if (op == "cover") {
    const auto c = need_class();
    tsing_cover_invariants inv{};
    check(tsing_fn_double_cover(c, &inv));
    o.result = {{"branch", class_json(c)}, {"chi", inv.chi}, {"k_squared", inv.k_self},
                {"p_g", inv.p_g},         {"q", inv.q},     {"adjoint", class_json(inv.adjoint)}};
    o.text = "chi=" + std::to_string(inv.chi) + " K^2=" + std::to_string(inv.k_self) +
             " p_g=" + std::to_string(inv.p_g) + " q=" + std::to_string(inv.q) + " K+L=" + class_text(inv.adjoint) +
             "\n";
  } else if (op == "splittings") {
    const auto c = need_class();
    size_t count = 0;
    const tsing_status probe = tsing_fn_splittings(c, nullptr, 0, &count);
    if (probe != TSING_BUFFER_TOO_SMALL) check(probe);
    std::vector<tsing_splitting> buf(count);
    check(tsing_fn_splittings(c, buf.data(), buf.size(), &count));
    json arr = json::array();
    o.markdown = "| D1 | D2 | m | d |\n|---|---|---|---|\n";
    for (const auto& s : buf) {
      arr.push_back({{"first", class_json(s.first)}, {"second", class_json(s.second)}, {"m", s.m}, {"d", s.d}});
      o.text += class_text(s.first) + " + " + class_text(s.second) + ": m=" + std::to_string(s.m) +
                " d=" + std::to_string(s.d) + "\n";
      o.markdown += "| " + class_text(s.first) + " | " + class_text(s.second) + " | " + std::to_string(s.m) + " | " +
                    std::to_string(s.d) + " |\n";
    }
    o.result = {{"total", class_json(c)}, {"splittings", arr}};
  } else if (op == "moduli") {
    tsing_moduli_case mc;
    if (moduli_case == "generic") mc = TSING_MODULI_GENERIC;
    else if (moduli_case == "R1") mc = TSING_MODULI_R1;
    else if (moduli_case == "R2") mc = TSING_MODULI_R2;
    else if (moduli_case == "R3") mc = TSING_MODULI_R3;
    else throw UsageError("unknown moduli case: " + moduli_case);
    int64_t v = 0;
    check(tsing_fn_moduli_count(mc, d, &v));
    o.inputs = {{"case", moduli_case}, {"d", d}};
    o.result = {{"moduli", v}};
    o.text = std::to_string(v) + "\n";
  }
  return o;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

Output cmd_census(bool records, int max_level, int64_t d_max) {
  Output o = make_output("census");
  if (records) {
    tsing_census* raw = nullptr;
    check(tsing_census_run(max_level, d_max, &raw));
    CensusPtr c(raw);
    o.inputs = {{"records", true}, {"max_level", max_level}, {"dmax", d_max}};
    json arr = json::array();
    std::vector<std::string> anchors;
    o.markdown = "| Cartier index | T-singularity | T-string | Verdict | Reason |\n|---|---|---|---|---|\n";
    for (size_t i = 0; i < tsing_census_size(c.get()); ++i) {
      const json r = record_json(c.get(), i);
      arr.push_back(r);
      const std::string reason = r["reason"].is_null() ? std::string(r["note"]) : std::string(r["reason"]["anchor"]);
      if (!r["reason"].is_null()) anchors.push_back(r["reason"]["anchor"]);
      o.text += std::to_string(int64_t(r["cartier_index"])) + "  " + std::string(r["singularity"]) + "  " +
                list_text(r["tstring"].get<std::vector<int64_t>>()) + "  " + std::string(r["verdict"]) +
                (reason.empty() ? "" : "  " + reason) + "\n";
      o.markdown += "| " + std::to_string(int64_t(r["cartier_index"])) + " | " + std::string(r["singularity"]) +
                    " | " + list_text(r["tstring"].get<std::vector<int64_t>>()) + " | " +
                    std::string(r["verdict"]) + " | " + md_escape(reason) + " |\n";
    }
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    o.citations = anchors;
    o.result = {{"records", arr}};
    return o;
  }

  tsing_census* raw = nullptr;
  check(tsing_census_main_theorem(&raw));
  CensusPtr c(raw);
  json theorem = json::array();
  std::string md = "| Cartier index | T-singularity | Construction |\n|---|---|---|\n";
  std::string txt = "Cartier index  T-singularity  Construction\n";
  for (size_t i = 0; i < tsing_census_size(c.get()); ++i) {
    tsing_record_info r{};
    check(tsing_census_record(c.get(), i, &r));
    json row = record_json(c.get(), i);
    row["label"] = singularity_label(r);
    theorem.push_back(row);
    md += "| " + std::to_string(r.cartier_index) + " | " + singularity_label(r) + " | " +
          md_escape(tsing_census_record_construction(c.get(), i)) + " |\n";
    txt += std::to_string(r.cartier_index) + "  " + singularity_label(r) + "  " +
           tsing_census_record_construction(c.get(), i) + "\n";
  }

  json lemma = json::array();
  md += "\n| r-d | n | K^2 of resolution | T-singularity | T-string |\n|---|---|---|---|---|\n";
  txt += "\nr-d  n  K^2  T-singularity  T-string\n";
  for (size_t i = 0; i < tsing_lemma_row_count(); ++i) {
    tsing_lemma_row row{};
    const char* sing = nullptr;
    const char* label = nullptr;
    check(tsing_lemma_row_at(i, &row, &sing, &label));
    lemma.push_back({{"level", row.level},
                     {"n", row.n},
                     {"k2_resolution", row.k2_resolution},
                     {"singularity", sing},
                     {"tstrings", label}});
    md += "| " + std::to_string(row.level) + " | " + std::to_string(row.n) + " | " +
          std::to_string(row.k2_resolution) + " | " + sing + " | " + label + " |\n";
    txt += std::to_string(row.level) + "  " + std::to_string(row.n) + "  " + std::to_string(row.k2_resolution) +
           "  " + sing + "  " + label + "\n";
  }

  json reasons = json::array();
  for (size_t i = 0; i < tsing_reason_count(); ++i) {
    const char* anchor = nullptr;
    const char* quote = nullptr;
    int cited = 0;
    check(tsing_reason_at(i, &anchor, &quote, &cited));
    reasons.push_back({{"anchor", anchor}, {"quote", quote}, {"cited", static_cast<bool>(cited)}});
    o.citations.push_back(anchor);
  }
  o.result = {{"theorem", theorem}, {"lemma", lemma}, {"reasons", reasons}};
  o.text = txt;
  o.markdown = md;
  return o;
}

// Parses "1/N(1,Q)" or "N,Q".
std::pair<int64_t, int64_t> parse_quotient(const std::string& s) {
  int64_t order = 0, weight = 0, one = 0;
  char tail = 0;
  if (std::sscanf(s.c_str(), "1/%" SCNd64 "(%" SCNd64 ",%" SCNd64 ")%c", &order, &one, &weight, &tail) == 3 && one == 1) {
    return {order, weight};
  }
  if (std::sscanf(s.c_str(), "%" SCNd64 ",%" SCNd64 "%c", &order, &weight, &tail) == 2) return {order, weight};
  throw UsageError("cannot parse singularity type: " + s);
}

int64_t inverse_mod(int64_t q, int64_t n) {
  int64_t r0 = n, r1 = q % n, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const int64_t t = r0 / r1;
    r0 -= t * r1;
    std::swap(r0, r1);
    s0 -= t * s1;
    std::swap(s0, s1);
  }
  return ((s0 % n) + n) % n;
}

Output cmd_verify(const std::string& type, int64_t d_max) {
  const auto [order, weight] = parse_quotient(type);
  if (order < 2 || weight <= 0 || weight >= order || std::gcd(order, weight) != 1) {
    throw UsageError("not a cyclic quotient type: " + type);
  }
  const int64_t dual = inverse_mod(weight, order);
  tsing_census* raw = nullptr;
  check(tsing_census_run(2, d_max, &raw));
  CensusPtr c(raw);
  std::optional<size_t> found;
  for (size_t i = 0; i < tsing_census_size(c.get()); ++i) {
    tsing_record_info r{};
    check(tsing_census_record(c.get(), i, &r));
    if (r.order == order && (r.weight == weight || r.weight == dual)) {
      if (r.verdict != TSING_VERDICT_ADMITTED) {
        throw UsageError(quotient_text(order, weight) + " is " + verdict_name(r.verdict) + ", nothing to verify");
      }
      found = i;
      break;
    }
  }
  if (!found) throw UsageError(quotient_text(order, weight) + " is not a census candidate");

  tsing_report* rep_raw = nullptr;
  check(tsing_census_verify(c.get(), *found, &rep_raw));
  ReportPtr rep(rep_raw);
  Output o = make_output("verify");
  o.inputs = {{"type", type}, {"dmax", d_max}};
  json checks = json::array();
  o.markdown = "| check | expected | actual | result |\n|---|---|---|---|\n";
  for (size_t i = 0; i < tsing_report_size(rep.get()); ++i) {
    const char* name = nullptr;
    const char* expected = nullptr;
    const char* actual = nullptr;
    int passed = 0;
    check(tsing_report_check(rep.get(), i, &name, &passed, &expected, &actual));
    checks.push_back({{"name", name}, {"passed", static_cast<bool>(passed)}, {"expected", expected}, {"actual", actual}});
    o.text += std::string(passed ? "PASS " : "FAIL ") + name + ": expected " + expected + ", got " + actual + "\n";
    o.markdown += std::string("| ") + name + " | " + md_escape(expected) + " | " + md_escape(actual) + " | " +
                  (passed ? "pass" : "FAIL") + " |\n";
  }
  const bool all = tsing_report_all_passed(rep.get());
  o.text += std::string(all ? "all checks passed" : "some checks FAILED") + "\n";
  o.result = {{"record", record_json(c.get(), *found)}, {"checks", checks}, {"all_passed", all}};
  return o;
}

void emit(const std::string& body, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_path);
  f << body;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for T-singularities and their census", "tsing"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tsing_version()));

  std::string format_name = "text";
  std::string out_path;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "md"}))
      ->capture_default_str();
  app.add_option("--out", out_path, "Write output to FILE; a directory receives census.json for census");

  std::optional<Output> result;

  // hj
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung continued fractions");
  hj->require_subcommand(1);
  int64_t hj_n = 0, hj_q = 0;
  auto* hj_expand = hj->add_subcommand("expand", "Expand N/Q into its string");
  hj_expand->add_option("N", hj_n)->required();
  hj_expand->add_option("Q", hj_q)->required();
  hj_expand->callback([&] { result = cmd_hj_expand(hj_n, hj_q); });

  std::vector<int64_t> hj_entries;
  auto* hj_eval = hj->add_subcommand("eval", "Evaluate a string to its cyclic quotient");
  hj_eval->add_option("entries", hj_entries)->required();
  hj_eval->callback([&] { result = cmd_hj_eval(hj_entries); });

  auto* hj_classify = hj->add_subcommand("classify", "Classify a string as RDP, T or neither");
  hj_classify->add_option("entries", hj_entries)->required();
  hj_classify->callback([&] { result = cmd_hj_classify(hj_entries); });

  std::string side;
  auto* hj_iterate = hj->add_subcommand("iterate", "Apply one T-string iteration step");
  hj_iterate->add_option("side", side)->required()->check(CLI::IsMember({"left", "right"}));
  hj_iterate->add_option("entries", hj_entries)->required();
  hj_iterate->callback([&] { result = cmd_hj_iterate(side, hj_entries); });

  // tstring
  auto* ts = app.add_subcommand("tstring", "T-string enumeration");
  ts->require_subcommand(1);
  int ts_level = 0;
  int64_t ts_dmax = 1;
  auto* ts_gen = ts->add_subcommand("generate", "All T-strings with r - d = level and d <= dmax");
  ts_gen->add_option("--level", ts_level)->required();
  ts_gen->add_option("--dmax", ts_dmax)->required();
  ts_gen->callback([&] { result = cmd_tstring_generate(ts_level, ts_dmax); });
  auto* ts_seeds = ts->add_subcommand("seeds", "Index-2 seed strings with d <= dmax");
  ts_seeds->add_option("--dmax", ts_dmax)->required();
  ts_seeds->callback([&] { result = cmd_tstring_seeds(ts_dmax); });

  // discrepancy / plurigenus
  int64_t chi = 3;
  std::optional<int64_t> k_self;
  std::vector<int64_t> chain;
  auto* disc = app.add_subcommand("discrepancy", "Discrepancies of the chain resolving a string");
  disc->add_option("entries", chain)->required();
  disc->add_option("--chi", chi)->capture_default_str();
  disc->add_option("--k-self", k_self, "K^2 of the resolution (default: from r - d with K_X^2 = 1)");
  disc->callback([&] { result = cmd_discrepancy(chain, chi, k_self); });

  int64_t pm = 2, pm_max = 0;
  auto* plur = app.add_subcommand("plurigenus", "Plurigenera of the surface carrying the string");
  plur->add_option("entries", chain)->required();
  plur->add_option("--m", pm, "First m (>= 2)")->capture_default_str();
  plur->add_option("--m-max", pm_max, "Last m (default: --m)");
  plur->add_option("--chi", chi)->capture_default_str();
  plur->add_option("--k-self", k_self, "K^2 of the resolution (default: from r - d with K_X^2 = 1)");
  plur->callback([&] { result = cmd_plurigenus(chain, pm, pm_max, chi, k_self); });

  // hilbert
  HilbertArgs ha;
  auto* hil = app.add_subcommand("hilbert", "Hilbert series of a weighted complete intersection");
  hil->add_option("--weights", ha.weights)->required()->delimiter(',');
  hil->add_option("--relations", ha.relations)->delimiter(',');
  hil->add_option("--coeff", ha.coeff, "Coefficient of t^m");
  hil->add_option("--upto", ha.upto, "Coefficients of t^0..t^m");
  auto* cw = hil->add_option("--compare-weights", ha.compare_weights)->delimiter(',');
  hil->add_option("--compare-relations", ha.compare_relations)->delimiter(',')->needs(cw);
  hil->add_flag("--plurigenera", ha.plurigenera, "Compare with chi + m(m-1)/2 K^2 for 2 <= m <= m-max");
  hil->add_option("--chi", ha.chi)->capture_default_str();
  hil->add_option("--k2", ha.k2, "K^2 as p or p/q")->capture_default_str();
  hil->add_option("--m-max", ha.m_max)->capture_default_str();
  hil->callback([&] {
    ha.compare = !ha.compare_weights.empty();
    result = cmd_hilbert(ha);
  });

  // fn
  auto* fn = app.add_subcommand("fn", "Divisor classes on Hirzebruch surfaces");
  fn->require_subcommand(1);
  int64_t fn_n = 0, fn_d = 1;
  std::vector<int64_t> fn_class, fn_with;
  std::string moduli_case = "generic";
  for (const char* op : {"intersect", "h0", "genus", "dbound", "canonical", "aut", "cover", "splittings"}) {
    auto* sub = fn->add_subcommand(op);
    sub->add_option("--n", fn_n, "F_n")->required();
    if (std::string(op) != "canonical" && std::string(op) != "aut") {
      sub->add_option("--class", fn_class, "X,Y meaning X s0 + Y G")->required()->delimiter(',')->expected(2);
    }
    if (std::string(op) == "intersect") {
      sub->add_option("--with", fn_with, "X,Y meaning X s0 + Y G")->required()->delimiter(',')->expected(2);
    }
    const std::string name = op;
    sub->callback([&, name] { result = cmd_fn(name, fn_n, fn_class, fn_with, moduli_case, fn_d); });
  }
  auto* fn_mod = fn->add_subcommand("moduli", "Moduli count of an index-2 family");
  fn_mod->add_option("--case", moduli_case)
      ->check(CLI::IsMember({"generic", "R1", "R2", "R3"}))
      ->capture_default_str();
  fn_mod->add_option("--d", fn_d)->capture_default_str();
  fn_mod->callback([&] { result = cmd_fn("moduli", 0, {}, {}, moduli_case, fn_d); });

  // census / verify
  bool records = false;
  int max_level = 2;
  int64_t census_dmax = 32;
  auto* census = app.add_subcommand("census", "Classification tables");
  auto* records_flag =
      census->add_flag("--records", records, "Every candidate with its verdict instead of the summary tables");
  census->add_option("--max-level", max_level)->capture_default_str()->needs(records_flag);
  census->add_option("--dmax", census_dmax)->capture_default_str()->needs(records_flag);
  census->callback([&] { result = cmd_census(records, max_level, census_dmax); });

  std::string vtype;
  auto* verify = app.add_subcommand("verify", "Recheck the construction of an admitted type");
  verify->add_option("type", vtype, "1/N(1,Q) or N,Q")->required();
  verify->add_option("--dmax", census_dmax)->capture_default_str();
  verify->callback([&] { result = cmd_verify(vtype, census_dmax); });

  try {
    app.parse(argc, argv);
    const Format fmt = format_name == "json" ? Format::Json : format_name == "md" ? Format::Md : Format::Text;
    const std::string body = render(*result, fmt);

    if (!out_path.empty() && std::filesystem::is_directory(out_path)) {
      if (result->command != "census") throw UsageError("--out may name a directory only for census");
      const std::filesystem::path dir(out_path);
      emit(render(*result, Format::Json), (dir / "census.json").string());
      if (fmt != Format::Json) emit(body, (dir / (fmt == Format::Md ? "census.md" : "census.txt")).string());
    } else {
      emit(body, out_path);
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "tsing: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "tsing: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "tsing: internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
