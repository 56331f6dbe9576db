#include "tsing/census.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tsing/errors.hpp"
#include "tsing/exceptional_lattice.hpp"
#include "tsing/hilbert_series.hpp"
#include "tsing/hirzebruch.hpp"

namespace tsing {

namespace {

// ---------------------------------------------------------------------------
// Exclusion reasons

enum ReasonId { kIndex2Bound = 0, kFiveTwo, kLongChain, kLevelTwoUnique };

const std::vector<ExclusionReason>& reasons() {
  static const std::vector<ExclusionReason> table = {
      {"index2-branch-genus-bound", "we have $d\\le 32$", false},
      {"level1-string-5-2", "section of the fibration with a double point, which is impossible", false},
      {"level1-chain-meets-minus2-curve", "the curve $A$ intersects a $(-2)$ curve, which is not possible", false},
      {"level2-unique-type", "the singularity must be of type $\\frac{1}{25}(1,14)$", true},
  };
  return table;
}

const std::string kConstructionIndex2 = "double cover of F_2 branched on |4s0+2G|, string over sigma_inf";
const std::string kConstructionIndex3 =
    "elliptic surface over F_6 with a (-3)-section and an I_2 fibre, blown up at the node of a singular fibre";
const std::string kConstructionIndex5 =
    "elliptic surface over F_6 with a (-3)-section, singular fibre blown up twice (nodal or cuspidal)";
const std::string kConstructionOpen = "bound-admissible, construction open";
const std::string kCitedLevelTwo = "cited constraint: r - d = 2 forces a unique singularity type";

// ---------------------------------------------------------------------------
// String patterns, matched in the orientation given

bool is_index2_seed(const TString& s) {
  const auto e = s.entries();
  if (e.size() == 1) return e[0] == 4;
  if (e.front() != 3 || e.back() != 3) return false;
  return std::all_of(e.begin() + 1, e.end() - 1, [](std::int64_t b) { return b == 2; });
}

bool is_five_two(const TString& s) { return s.length() == 2 && s[0] == 5 && s[1] == 2; }

// [4, 2^{d-2}, 3, 2]; returns d, or 0 on mismatch
std::int64_t long_chain_d(const TString& s) {
  const auto e = s.entries();
  if (e.size() < 3 || e.front() != 4 || e[e.size() - 2] != 3 || e.back() != 2) return 0;
  if (!std::all_of(e.begin() + 1, e.end() - 2, [](std::int64_t b) { return b == 2; })) return 0;
  return static_cast<std::int64_t>(e.size()) - 1;
}

bool is_level_two_survivor(const TString& s) { return s.length() == 3 && s[0] == 2 && s[1] == 5 && s[2] == 3; }

bool matches_known_pattern(const TString& s) {
  return is_index2_seed(s) || is_five_two(s) || long_chain_d(s) != 0 || is_level_two_survivor(s);
}

// Identifies a singularity with its mirror.
std::pair<std::int64_t, std::int64_t> mirror_key(const CyclicQuotient& q) {
  return {q.order, std::min(q.weight, q.dual_weight())};
}

// ---------------------------------------------------------------------------
// Moduli bookkeeping

std::optional<std::int64_t> index2_moduli(std::int64_t d) {
  if (d >= 1 && d <= 3) return moduli_count(ModuliCase::Generic, d);
  const auto splits = enumerate_splittings(FnClass::from_sigma0(2, 4, 2));
  const ModuliCase cases[] = {ModuliCase::R1, ModuliCase::R2, ModuliCase::R3};
  for (std::size_t i = 0; i < splits.size() && i < 3; ++i) {
    if (splits[i].d == d) return moduli_count(cases[i]);
  }
  return std::nullopt;
}

// Branch divisors D in |3 s0| on F_6 modulo Aut(F_6), with `conditions`
// independent codimension-one conditions imposed on D.
std::int64_t index_f6_moduli(std::int64_t conditions) {
  return (h0(FnClass::from_sigma0(6, 3, 0)) - 1) - conditions - aut_dim(6);
}

Component component_for(std::int64_t moduli) {
  if (moduli == kMainComponentDim - 1) return {ComponentKind::MainComponentDivisor, 1};
  return {ComponentKind::MainComponentCodim, kMainComponentDim - moduli};
}

void admit(CensusRecord& rec) {
  rec.verdict = Verdict::Admitted;
  rec.reason.reset();
  switch (rec.cartier_index) {
    case 2: {
      rec.smoothable = {{"", Smoothability::Yes}};
      rec.moduli_dim = index2_moduli(rec.quotient.d());
      if (rec.moduli_dim) {
        rec.construction = kConstructionIndex2;
        rec.component = component_for(*rec.moduli_dim);
      } else {
        rec.construction = kConstructionIndex2;
        rec.note = kConstructionOpen;
        rec.component = {ComponentKind::NotApplicable, 0};
      }
      break;
    }
    case 3:
      rec.construction = kConstructionIndex3;
      // the branch divisor must acquire a double point
      rec.moduli_dim = index_f6_moduli(1);
      rec.component = component_for(*rec.moduli_dim);
      rec.smoothable = {{"", Smoothability::Yes}};
      break;
    case 5:
      rec.construction = kConstructionIndex5;
      rec.moduli_dim = index_f6_moduli(0);
      rec.component = {ComponentKind::NewComponent, 0};
      rec.smoothable = {{"nodal fibre", Smoothability::No}, {"cuspidal fibre", Smoothability::Conjectural}};
      rec.note = kCitedLevelTwo;
      break;
    default:
      throw std::logic_error("admit: unexpected Cartier index");
  }
}

void exclude(CensusRecord& rec, ReasonId id) {
  rec.verdict = Verdict::Excluded;
  rec.reason = reasons()[id];
  rec.construction.clear();
  rec.moduli_dim.reset();
  rec.component = {ComponentKind::NotApplicable, 0};
  rec.smoothable.clear();
  if (rec.reason->cited) rec.note = kCitedLevelTwo;
}

void resolve(CensusRecord& rec) {
  const TString& s = rec.tstring;
  switch (rec.level) {
    case 0:
      if (!is_index2_seed(s)) break;
      if (rec.quotient.d() <= d_bound(FnClass::from_sigma0(2, 4, 2))) {
        admit(rec);
      } else {
        exclude(rec, kIndex2Bound);
      }
      return;
    case 1:
      if (is_five_two(s)) {
        exclude(rec, kFiveTwo);
        return;
      }
      if (const std::int64_t d = long_chain_d(s); d != 0) {
        if (d == 2) {
          admit(rec);
        } else {
          exclude(rec, kLongChain);
        }
        return;
      }
      break;
    case 2:
      if (is_level_two_survivor(s)) {
        admit(rec);
      } else {
        exclude(rec, kLevelTwoUnique);
      }
      return;
    default:
      break;
  }
  rec.verdict = Verdict::Unresolved;
}

void sort_records(std::vector<CensusRecord>& records) {
  std::sort(records.begin(), records.end(), [](const CensusRecord& x, const CensusRecord& y) {
    const auto kx = std::tuple{x.cartier_index, x.quotient.d(), x.quotient.order(), x.quotient.weight()};
    const auto ky = std::tuple{y.cartier_index, y.quotient.d(), y.quotient.order(), y.quotient.weight()};
    return kx < ky;
  });
}

std::string join_rationals(const std::vector<Rational>& v) { return QDivisor{v}.to_string(); }

}  // namespace

const std::vector<ExclusionReason>& reason_table() { return reasons(); }

TString preferred_orientation(const TString& s) {
  const TString r = s.reversed();
  if (matches_known_pattern(s)) return s;
  if (matches_known_pattern(r)) return r;
  return std::max(s, r);
}

std::vector<CensusRecord> enumerate_candidates(int level, std::int64_t d_max) {
  if (level < 0 || level > kMaxCensusLevel) {
    throw DomainError("census level must lie in [0, 2]: r - d <= 2 bounds T-singular I-surfaces");
  }
  std::map<std::pair<std::int64_t, std::int64_t>, CensusRecord> by_type;
  for (const TString& raw : generate(level, d_max)) {
    const TString s = preferred_orientation(raw);
    const StringClass cls = classify_string(s);
    if (cls.kind != StringKind::NonCanonicalT) throw std::logic_error("generate produced a non-T string");
    const QuotientType& qt = *cls.type;
    const auto key = mirror_key(qt.quotient());
    if (by_type.count(key)) continue;
    const auto r = static_cast<std::int64_t>(s.length());
    by_type.emplace(key, CensusRecord{
                             .cartier_index = qt.n(),
                             .quotient = qt,
                             .tstring = s,
                             .level = r - qt.d(),
                             .k2_resolution = k2_resolution(Rational(1), r, qt.d()).num(),
                             .verdict = Verdict::Pending,
                             .reason = std::nullopt,
                             .construction = {},
                             .note = {},
                             .moduli_dim = std::nullopt,
                             .component = {},
                             .smoothable = {},
                             .family_d_max = std::nullopt,
                         });
  }
  std::vector<CensusRecord> out;
  out.reserve(by_type.size());
  for (auto& [key, rec] : by_type) out.push_back(std::move(rec));
  sort_records(out);
  return out;
}

std::vector<CensusRecord> apply_filters(std::vector<CensusRecord> records) {
  for (CensusRecord& rec : records) {
    if (rec.verdict == Verdict::Pending) resolve(rec);
  }
  return records;
}

std::vector<CensusRecord> run_census(int max_level, std::int64_t d_max) {
  if (max_level < 0 || max_level > kMaxCensusLevel) {
    throw DomainError("census level must lie in [0, 2]: r - d <= 2 bounds T-singular I-surfaces");
  }
  std::vector<CensusRecord> all;
  for (int level = 0; level <= max_level; ++level) {
    auto recs = apply_filters(enumerate_candidates(level, d_max));
    all.insert(all.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  sort_records(all);
  return all;
}

std::vector<CensusRecord> main_theorem_table() {
  const std::int64_t bound = d_bound(FnClass::from_sigma0(2, 4, 2));
  // one past the bound so the cut-off itself is exercised
  const auto census = run_census(kMaxCensusLevel, bound + 1);
  std::vector<CensusRecord> rows;
  std::int64_t family_max = 0;
  for (const CensusRecord& rec : census) {
    if (rec.verdict != Verdict::Admitted) continue;
    if (rec.cartier_index == 2) {
      family_max = std::max(family_max, rec.quotient.d());
      if (rec.quotient.d() != 1) continue;
    }
    rows.push_back(rec);
  }
  for (CensusRecord& row : rows) {
    if (row.cartier_index == 2) row.family_d_max = family_max;
  }
  return rows;
}

std::vector<LemmaRow> lemma_table() {
  std::vector<LemmaRow> rows;
  for (int level = 0; level <= kMaxCensusLevel; ++level) {
    const auto recs = apply_filters(enumerate_candidates(level, 3));
    LemmaRow row;
    row.level = level;
    bool first = true;
    for (const CensusRecord& rec : recs) {
      if (rec.verdict != Verdict::Admitted) continue;
      const auto r = static_cast<std::int64_t>(rec.tstring.length());
      const std::int64_t k2 = k2_resolution(Rational(1), r, rec.quotient.d()).num();
      if (first) {
        row.n = rec.cartier_index;
        row.k2_resolution = k2;
        first = false;
      } else if (row.n != rec.cartier_index || row.k2_resolution != k2) {
        throw std::logic_error("lemma table row is not homogeneous");
      }
      row.strings.push_back(rec.tstring);
    }
    if (first) throw std::logic_error("lemma table row without admitted strings");
    if (level == 0) {
      row.singularity = "1/4d(1,2d-1)";
      row.strings_label = "[4] or [3,3] or [3,2,...,2,3]";
    } else {
      row.singularity = evaluate(row.strings.front()).to_string();
      row.strings_label = row.strings.front().to_string();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace {

// Pullback coefficients of f^*K_X for the three constructions, in the
// orientation the constructions name the curves.
std::optional<std::vector<Rational>> expected_pullback(const TString& s) {
  if (is_index2_seed(s)) return std::vector<Rational>(s.length(), Rational(1, 2));
  const TString index3({4, 3, 2});
  const TString index5({3, 5, 2});
  if (s == index3) return std::vector<Rational>{Rational(2, 3), Rational(2, 3), Rational(1, 3)};
  if (s == index5) return std::vector<Rational>{Rational(3, 5), Rational(4, 5), Rational(2, 5)};
  if (s.reversed() == index3 || s.reversed() == index5) {
    auto v = *expected_pullback(s.reversed());
    std::reverse(v.begin(), v.end());
    return v;
  }
  return std::nullopt;
}

void add_check(VerificationReport& rep, std::string name, const std::string& expected, const std::string& actual) {
  rep.checks.push_back({std::move(name), expected == actual, expected, actual});
}

}  // namespace

VerificationReport verify_construction(const CensusRecord& record) {
  if (record.verdict != Verdict::Admitted) throw DomainError("verify_construction needs an admitted record");

  constexpr std::int64_t kChi = 3;
  const Rational k2x(1);
  VerificationReport rep;
  rep.quotient = record.quotient.quotient();

  const TString& s = record.tstring;
  const auto r = static_cast<std::int64_t>(s.length());
  const ExceptionalConfig cfg = chain_config(s, kChi, record.k2_resolution);
  const QDivisor delta = discrepancies(cfg);

  const auto expected = expected_pullback(s);
  add_check(rep, "discrepancies", expected ? join_rationals(*expected) : "(no stored pullback)", delta.to_string());
  add_check(rep, "cartier_index", std::to_string(record.cartier_index), std::to_string(cartier_index(delta)));
  add_check(rep, "k2_resolution", std::to_string(record.k2_resolution),
            k2_resolution(k2x, r, record.quotient.d()).to_string());
  add_check(rep, "kx_squared", "1", kx_squared(cfg, delta).to_string());

  bool plurigenera_ok = true;
  bool correction_ok = true;
  std::string first_bad_pg, first_bad_corr;
  for (std::int64_t m = 2; m <= 10; ++m) {
    const Rational pg = plurigenus(kChi, k2x, cfg, delta, m);
    const Rational want(3 + m * (m - 1) / 2);
    if (pg != want && plurigenera_ok) {
      plurigenera_ok = false;
      first_bad_pg = "m=" + std::to_string(m) + ": " + pg.to_string() + " vs " + want.to_string();
    }
    const Rational corr = correction_term(cfg, delta, m);
    if (!corr.is_zero() && correction_ok) {
      correction_ok = false;
      first_bad_corr = "m=" + std::to_string(m) + ": " + corr.to_string();
    }
  }
  add_check(rep, "plurigenus(m) = 3 + m(m-1)/2, 2<=m<=10", "all equal", plurigenera_ok ? "all equal" : first_bad_pg);
  add_check(rep, "correction_term(m) = 0, 2<=m<=10", "all zero", correction_ok ? "all zero" : first_bad_corr);

  if (record.cartier_index == 2) {
    const FnClass branch = FnClass::from_sigma0(2, 4, 2);
    const CoverInvariants cover = double_cover(branch);
    add_check(rep, "double cover of F_2 on 4s0+2G: p_g", "2", std::to_string(cover.p_g));
    add_check(rep, "double cover of F_2 on 4s0+2G: chi", "3", std::to_string(cover.chi));
    add_check(rep, "double cover of F_2 on 4s0+2G: K^2", "0", std::to_string(cover.k_self));
    add_check(rep, "d within branch genus bound", "true",
              record.quotient.d() <= d_bound(branch) ? "true" : "false");
    // L = 3F + Delta on the elliptic surface: L^2 = 8, K.L = 2
    add_check(rep, "chi(3F + Delta)", "6", riemann_roch(kChi, Rational(8), Rational(2)).to_string());
  } else {
    const FnClass branch = FnClass::negative_section(6) + FnClass::from_sigma0(6, 3, 0);
    const CoverInvariants cover = double_cover(branch);
    add_check(rep, "double cover of F_6 on sigma_inf+3s0: p_g", "2", std::to_string(cover.p_g));
    add_check(rep, "double cover of F_6 on sigma_inf+3s0: q", "0", std::to_string(cover.q));
    add_check(rep, "double cover of F_6 on sigma_inf+3s0: K^2", "0", std::to_string(cover.k_self));
    add_check(rep, "adjoint class K+L", FnClass::ruling(6).to_string(), cover.adjoint.to_string());
    // L = 2B + 7F: L^2 = 16, K.L = 2
    add_check(rep, "chi(2B + 7F)", "10", riemann_roch(kChi, Rational(16), Rational(2)).to_string());
  }

  if (record.cartier_index == 3) {
    const HilbertSeries hypersurface = series({1, 1, 2, 5}, {10});
    const HilbertSeries complete_intersection = series({1, 1, 2, 3, 5}, {3, 10});
    const HilbertSeries subring = series({1, 1, 2}, {});
    add_check(rep, "h_R: (1,1,2,3,5;3,10) equals (1,1,2,5;10)", "true",
              equal(hypersurface, complete_intersection) ? "true" : "false");
    add_check(rep, "h_R matches plurigenera up to m=20", "true",
              matches_plurigenera(complete_intersection, kChi, k2x, 20) ? "true" : "false");
    add_check(rep, "dim S_4 = dim R_4", std::to_string(complete_intersection.coefficient(4)),
              std::to_string(subring.coefficient(4)));
    add_check(rep, "dim S_5", "12", std::to_string(subring.coefficient(5)));
    add_check(rep, "dim R_5", "13", std::to_string(complete_intersection.coefficient(5)));
  }
  return rep;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pending: return "pending";
    case Verdict::Admitted: return "admitted";
    case Verdict::Excluded: return "excluded";
    case Verdict::Unresolved: return "unresolved";
  }
  return "?";
}

const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::MainComponentDivisor: return "main-component-divisor";
    case ComponentKind::MainComponentCodim: return "main-component-codim";
    case ComponentKind::NewComponent: return "new-component";
    case ComponentKind::NotApplicable: return "not-applicable";
  }
  return "?";
}

const char* to_string(Smoothability s) {
  switch (s) {
    case Smoothability::Yes: return "yes";
    case Smoothability::No: return "no";
    case Smoothability::Conjectural: return "conjectural";
  }
  return "?";
}

}  // namespace tsing
