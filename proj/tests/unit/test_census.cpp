#include <set>
#include <tuple>

#include "doctest.h"
#include "tsing/census.hpp"
#include "tsing/errors.hpp"
#include "tsing/exceptional_lattice.hpp"

using namespace tsing;

namespace {

TString ts(std::vector<std::int64_t> v) { return TString(std::move(v)); }

const CensusRecord* find(const std::vector<CensusRecord>& recs, std::int64_t order, std::int64_t weight) {
  for (const auto& r : recs) {
    const auto q = r.quotient.quotient();
    if (q.order == order && (q.weight == weight || q.dual_weight() == weight)) return &r;
  }
  return nullptr;
}

std::set<std::pair<std::int64_t, std::int64_t>> quotients(const std::vector<CensusRecord>& recs) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& r : recs) out.insert({r.quotient.order(), r.quotient.weight()});
  return out;
}

}  // namespace

TEST_CASE("enumerate_candidates") {
  const auto l0 = enumerate_candidates(0, 3);
  CHECK(quotients(l0) == std::set<std::pair<std::int64_t, std::int64_t>>{{4, 1}, {8, 3}, {12, 5}});
  for (const auto& r : l0) CHECK(r.verdict == Verdict::Pending);

  const auto l1 = enumerate_candidates(1, 2);
  CHECK(l1.size() == 2);
  CHECK(find(l1, 9, 2) != nullptr);
  CHECK(find(l1, 18, 5) != nullptr);

  CHECK(find(enumerate_candidates(2, 1), 25, 14) != nullptr);
  CHECK_THROWS_AS(enumerate_candidates(3, 1), DomainError);
  CHECK_THROWS_AS(enumerate_candidates(-1, 1), DomainError);
}

TEST_CASE("mirror strings collapse to one record") {
  for (int level = 0; level <= 2; ++level) {
    std::set<std::pair<std::int64_t, std::int64_t>> seen;
    for (const auto& r : enumerate_candidates(level, 6)) {
      const auto q = r.quotient.quotient();
      const auto key = std::pair{q.order, std::min(q.weight, q.dual_weight())};
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("apply_filters") {
  const auto l1 = apply_filters(enumerate_candidates(1, 6));
  const auto* r9 = find(l1, 9, 2);
  REQUIRE(r9);
  CHECK(r9->verdict == Verdict::Excluded);
  CHECK(r9->reason->anchor == "level1-string-5-2");
  const auto* r18 = find(l1, 18, 5);
  REQUIRE(r18);
  CHECK(r18->verdict == Verdict::Admitted);
  CHECK(r18->tstring == ts({4, 3, 2}));
  CHECK_FALSE(r18->construction.empty());
  for (const auto& r : l1) {
    if (r.quotient.d() >= 3) {
      CHECK(r.verdict == Verdict::Excluded);
      CHECK(r.reason->anchor == "level1-chain-meets-minus2-curve");
    }
  }

  const auto l0 = apply_filters(enumerate_candidates(0, 33));
  const auto* r33 = find(l0, 4 * 33, 2 * 33 - 1);
  REQUIRE(r33);
  CHECK(r33->verdict == Verdict::Excluded);
  CHECK(r33->reason->anchor == "index2-branch-genus-bound");
  CHECK(find(l0, 4 * 32, 2 * 32 - 1)->verdict == Verdict::Admitted);
}

TEST_CASE("unknown patterns stay unresolved") {
  const TString odd = ts({2, 2, 2, 7});
  const auto cls = classify_string(odd);
  REQUIRE(cls.kind == StringKind::NonCanonicalT);
  CensusRecord rec{
      .cartier_index = cls.type->n(),
      .quotient = *cls.type,
      .tstring = odd,
      .level = 4 - cls.type->d(),
      .k2_resolution = 0,
      .verdict = Verdict::Pending,
      .reason = std::nullopt,
      .construction = {},
      .note = {},
      .moduli_dim = std::nullopt,
      .component = {},
      .smoothable = {},
      .family_d_max = std::nullopt,
  };
  const auto out = apply_filters({rec});
  CHECK(out[0].verdict == Verdict::Unresolved);
}

TEST_CASE("full census coverage") {
  const auto all = run_census(2, 32);
  std::set<std::int64_t> admitted_indices;
  std::size_t admitted = 0;
  for (const auto& r : all) {
    CHECK(r.verdict != Verdict::Unresolved);
    CHECK(r.verdict != Verdict::Pending);
    if (r.verdict == Verdict::Admitted) {
      ++admitted;
      admitted_indices.insert(r.cartier_index);
      if (r.cartier_index == 3) CHECK(r.quotient.quotient() == CyclicQuotient{18, 5});
      if (r.cartier_index == 5) CHECK(r.quotient.quotient() == CyclicQuotient{25, 14});
      if (r.cartier_index == 2) CHECK(r.quotient.d() <= 32);
    }
  }
  CHECK(admitted_indices == std::set<std::int64_t>{2, 3, 5});
  CHECK(admitted == 32 + 2);
  CHECK_THROWS_AS(run_census(3, 1), DomainError);
}

TEST_CASE("census output is sorted") {
  const auto all = run_census(2, 10);
  for (std::size_t i = 1; i < all.size(); ++i) {
    const auto& a = all[i - 1];
    const auto& b = all[i];
    const auto ka = std::tuple{a.cartier_index, a.quotient.d(), a.quotient.order(), a.quotient.weight()};
    const auto kb = std::tuple{b.cartier_index, b.quotient.d(), b.quotient.order(), b.quotient.weight()};
    CHECK(ka < kb);
  }
}

TEST_CASE("main theorem table") {
  const auto rows = main_theorem_table();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].cartier_index == 2);
  CHECK(rows[0].family_d_max == 32);
  CHECK(rows[0].moduli_dim == 27);
  CHECK(rows[0].component.kind == ComponentKind::MainComponentDivisor);
  CHECK(rows[1].quotient.quotient() == CyclicQuotient{18, 5});
  CHECK(rows[1].moduli_dim == 27);
  CHECK(rows[1].component.kind == ComponentKind::MainComponentDivisor);
  CHECK(rows[2].quotient.quotient() == CyclicQuotient{25, 14});
  CHECK(rows[2].tstring == ts({2, 5, 3}));
  CHECK(rows[2].moduli_dim == 28);
  CHECK(rows[2].component.kind == ComponentKind::NewComponent);
  REQUIRE(rows[2].smoothable.size() == 2);
  CHECK(rows[2].smoothable[0].value == Smoothability::No);
  CHECK(rows[2].smoothable[1].value == Smoothability::Conjectural);
}

TEST_CASE("index-2 moduli along the family") {
  const auto all = run_census(0, 32);
  auto moduli_at = [&](std::int64_t d) { return find(all, 4 * d, 2 * d - 1)->moduli_dim; };
  CHECK(moduli_at(1) == 27);
  CHECK(moduli_at(2) == 26);
  CHECK(moduli_at(3) == 25);
  CHECK(moduli_at(9) == 19);
  CHECK(moduli_at(21) == 7);
  CHECK(moduli_at(25) == 4);
  CHECK_FALSE(moduli_at(4).has_value());
  CHECK(find(all, 16, 7)->note == "bound-admissible, construction open");
  CHECK(find(all, 16, 7)->verdict == Verdict::Admitted);
  CHECK(find(all, 36, 17)->component.codim == 9);
}

TEST_CASE("lemma table") {
  const auto rows = lemma_table();
  REQUIRE(rows.size() == 3);
  const std::int64_t n[] = {2, 3, 5};
  const std::int64_t k2[] = {0, -1, -2};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i].level == static_cast<std::int64_t>(i));
    CHECK(rows[i].n == n[i]);
    CHECK(rows[i].k2_resolution == k2[i]);
    const TString& rep = rows[i].strings.front();
    const auto cls = classify_string(rep);
    CHECK(k2_resolution(Rational(1), static_cast<std::int64_t>(rep.length()), cls.type->d()) == Rational(k2[i]));
  }
  CHECK(rows[1].strings == std::vector<TString>{ts({4, 3, 2})});
  CHECK(rows[2].strings == std::vector<TString>{ts({2, 5, 3})});
  CHECK(rows[1].singularity == "1/18(1,5)");
  CHECK(rows[2].singularity == "1/25(1,14)");
}

TEST_CASE("reason anchors are intact") {
  const auto& table = reason_table();
  std::set<std::string> anchors;
  for (const auto& r : table) {
    CHECK_FALSE(r.quote.empty());
    CHECK(anchors.insert(r.anchor).second);
  }
  for (const auto& r : run_census(2, 32)) {
    if (r.verdict != Verdict::Excluded) continue;
    REQUIRE(r.reason.has_value());
    bool found = false;
    for (const auto& t : table) found |= (t.anchor == r.reason->anchor && t.quote == r.reason->quote);
    CHECK(found);
  }
}

TEST_CASE("verify_construction passes for every admitted record") {
  for (const auto& r : main_theorem_table()) {
    const auto rep = verify_construction(r);
    CHECK(rep.all_passed());
    for (const auto& c : rep.checks) {
      INFO(c.name << ": " << c.expected << " vs " << c.actual);
      CHECK(c.passed);
    }
  }
  for (const auto& r : run_census(0, 32)) CHECK(verify_construction(r).all_passed());
  const auto l1 = apply_filters(enumerate_candidates(1, 1));
  CHECK_THROWS_AS(verify_construction(*find(l1, 9, 2)), DomainError);
}

TEST_CASE("preferred orientation") {
  CHECK(preferred_orientation(ts({2, 3, 4})) == ts({4, 3, 2}));
  CHECK(preferred_orientation(ts({3, 5, 2})) == ts({2, 5, 3}));
  CHECK(preferred_orientation(ts({2, 5})) == ts({5, 2}));
  CHECK(preferred_orientation(ts({2, 3, 2, 2, 4})) == ts({4, 2, 2, 3, 2}));
  CHECK(preferred_orientation(ts({2, 2, 6, 2, 3})) == ts({3, 2, 6, 2, 2}));
}
